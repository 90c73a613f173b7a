// Copyright 2026 The qcb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qcb::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qcb_cli_" + name);
}

TEST(Cli, CheckWritesOneRowPerTrial) {
    Result r = call({"check", "prop1", "--trials", "5", "--seed", "3"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(count_lines(r.out), 6u);
    EXPECT_EQ(r.out.rfind("bound,trial,seed,dA,d,eps", 0), 0u);
    EXPECT_NE(r.err.find("check prop1: 5 trials, 5 reports, 0 violations"), std::string::npos);
}

TEST(Cli, SerialAndParallelAgree) {
    Result a = call({"check", "aux", "--trials", "3", "--format", "tsv"});
    Result b = call({"check", "aux", "--trials", "3", "--format", "tsv", "--serial"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find('\t'), std::string::npos);
}

TEST(Cli, SameChannelSameStateCollapses) {
    Result r = call({"check", "prop3", "--trials", "1", "--same-channel", "--same-state"});
    EXPECT_EQ(r.code, kExitOk);
    ASSERT_EQ(count_lines(r.out), 2u);
    std::string row = r.out.substr(r.out.find('\n') + 1);
    EXPECT_EQ(row.rfind("prop3-same-channel,0,", 0), 0u);
    EXPECT_NE(row.find(",exact,0,0,0,0"), std::string::npos) << row;
}

TEST(Cli, SeedFromEnvironment) {
    Result explicit_seed = call({"check", "prop1", "--trials", "2", "--seed", "1234"});
    setenv("QCB_SEED", "1234", 1);
    Result env_seed = call({"check", "prop1", "--trials", "2"});
    unsetenv("QCB_SEED");
    EXPECT_EQ(explicit_seed.out, env_seed.out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({"check", "prop9"}).code, kExitUsage);
    EXPECT_EQ(call({"check", "prop1", "--eps-source", "analytic"}).code, kExitUsage);
    EXPECT_EQ(call({"check", "prop1", "--dims", "A=two"}).code, kExitUsage);
    EXPECT_EQ(call({"check", "prop1", "--trials", "0"}).code, kExitUsage);
    EXPECT_EQ(call({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(call({}).code, kExitUsage);
    EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, TightnessTable) {
    Result r = call({"tightness", "--x", "0,0.001", "--log2d", "1000"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(count_lines(r.out), 3u);
    EXPECT_NE(r.out.find("0,1000,0,0,0,1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find(",0.98774"), std::string::npos) << r.out;
}

TEST(Cli, CapacityTable) {
    Result r = call({"capacity", "--family", "erasure", "--d", "4", "--p", "0.25"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("classical,1.5,closed-form"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("quantum,1,closed-form"), std::string::npos) << r.out;
}

TEST(Cli, ChannelExportAndDistance) {
    auto a = temp_file("id.json");
    auto b = temp_file("dep.json");
    auto c = temp_file("id3.json");
    ASSERT_EQ(call({"channel", "--family", "identity", "--d", "2", "--out", a.string()}).code, kExitOk);
    ASSERT_EQ(call({"channel", "--family", "depolarizing", "--d", "2", "--out", b.string()}).code, kExitOk);
    ASSERT_EQ(call({"channel", "--family", "identity", "--d", "3", "--out", c.string()}).code, kExitOk);
    Result r = call({"distance", a.string(), b.string(), "--method", "both"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("diamond,1.5"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("bures,"), std::string::npos);
    EXPECT_NE(r.err.find("sandwich ok"), std::string::npos);
    Result mismatch = call({"distance", a.string(), c.string()});
    EXPECT_EQ(mismatch.code, kExitUsage);
    EXPECT_NE(mismatch.err.find("differ in dimensions"), std::string::npos);
    Result missing = call({"distance", a.string(), temp_file("missing.json").string()});
    EXPECT_EQ(missing.code, kExitUsage);
    for (const auto& p : {a, b, c}) {
        std::filesystem::remove(p);
    }
}

TEST(Cli, MalformedChannelFileReportsPosition) {
    auto bad = temp_file("bad.json");
    {
        std::ofstream f(bad);
        f << "{\"din\": 2,\n\"dout\": 2,\n\"kraus\": [ ]] }";
    }
    auto good = temp_file("good.json");
    ASSERT_EQ(call({"channel", "--family", "identity", "--d", "2", "--out", good.string()}).code, kExitOk);
    Result r = call({"distance", bad.string(), good.string()});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find(bad.string() + ":3:"), std::string::npos) << r.err;
    std::filesystem::remove(bad);
    std::filesystem::remove(good);
}

}  // namespace
}  // namespace qcb::cli
