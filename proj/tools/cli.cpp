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

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>

#include "qcb/bounds.hpp"
#include "qcb/capacities.hpp"
#include "qcb/channel_io.hpp"
#include "qcb/distances.hpp"
#include "qcb/fuzz.hpp"
#include "qcb/report_io.hpp"

namespace qcb::cli {

namespace {

struct CheckArgs {
    std::string bound;
    std::size_t trials = 100;
    uint64_t seed = 7;
    std::string dims;
    bool same_channel = false;
    bool same_state = false;
    bool same_ensemble = false;
    int n = 2;
    std::size_t m = 0;
    std::size_t kraus = 0;
    std::string eps_source = "interval-upper";
    std::string out;
    std::string format = "csv";
    bool serial = false;
};

struct TightnessArgs {
    std::string family = "erasure";
    std::vector<double> log2d;
    std::vector<std::size_t> d;
    std::vector<double> x{1e-3, 1e-2, 0.05, 0.1};
    std::string out;
    std::string format = "csv";
};

struct DistanceArgs {
    std::string a;
    std::string b;
    std::string method = "both";
    double tol = 1e-7;
    std::string format = "csv";
};

struct FamilyArgs {
    std::string family = "erasure";
    std::size_t d = 2;
    double p = 0.5;
    std::string out;
    std::string format = "csv";
};

// Output goes to the file named by `path`, or to `fallback` when empty.
class Sink {
   public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw ArgumentError("cannot open '" + path + "' for writing");
            }
            os_ = file_.get();
        }
    }
    std::ostream& stream() { return *os_; }

   private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

std::map<std::string, std::size_t> parse_dims(const std::string& text) {
    std::map<std::string, std::size_t> dims;
    if (text.empty()) {
        return dims;
    }
    SubsystemShape shape = SubsystemShape::parse(text);
    for (std::size_t i = 0; i < shape.count(); ++i) {
        dims[shape.labels()[i]] = shape.dims()[i];
    }
    return dims;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
    CampaignConfig cfg;
    cfg.bound = a.bound;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.dims = parse_dims(a.dims);
    cfg.same_channel = a.same_channel;
    cfg.same_state = a.same_state;
    cfg.same_ensemble = a.same_ensemble;
    cfg.n = a.n;
    cfg.m = a.m;
    cfg.kraus = a.kraus;
    cfg.analytic_eps = a.eps_source == "analytic";
    validate(cfg);
    const TableFormat fmt = parse_table_format(a.format);

    CampaignResult res = a.serial ? run_campaign_serial(cfg) : run_campaign(cfg);
    Sink sink(a.out, out);
    write_reports(sink.stream(), res.reports, fmt);
    err << "check " << cfg.bound << ": " << cfg.trials << " trials, " << res.reports.size() << " reports, "
        << res.violations << " violations, max |negative margin| "
        << format_real(res.worst_margin < 0 ? -res.worst_margin : 0.0) << " bits\n";
    return res.violations == 0 ? kExitOk : kExitViolations;
}

int cmd_tightness(const TightnessArgs& a, std::ostream& out) {
    if (a.family != "erasure") {
        throw ArgumentError("tightness: only the erasure family is available");
    }
    std::vector<double> log2d = a.log2d;
    for (std::size_t d : a.d) {
        if (d < 2) {
            throw ArgumentError("tightness: d must be >= 2");
        }
        log2d.push_back(std::log2(static_cast<double>(d)));
    }
    if (log2d.empty()) {
        log2d = {10, 100, 1000};
    }
    std::vector<std::vector<std::string>> rows;
    for (double x : a.x) {
        for (double l : log2d) {
            TightnessRow r = tightness_row(x, l);
            rows.push_back({format_real(r.x), format_real(r.log2_d), format_real(r.beta_upper), format_real(r.lhs_q),
                            format_real(r.rhs_qc), format_real(r.ratio)});
        }
    }
    Sink sink(a.out, out);
    write_table(sink.stream(), {"x", "log2_d", "beta_upper", "lhs_Q", "rhs_QC", "ratio"}, rows,
                parse_table_format(a.format));
    return kExitOk;
}

int cmd_distance(const DistanceArgs& a, std::ostream& out, std::ostream& err) {
    const TableFormat fmt = parse_table_format(a.format);
    Channel phi = read_channel_file(a.a);
    Channel psi = read_channel_file(a.b);
    if (phi.din() != psi.din() || phi.dout() != psi.dout()) {
        throw ArgumentError("distance: channels differ in dimensions (" + std::to_string(phi.din()) + "->" +
                            std::to_string(phi.dout()) + " vs " + std::to_string(psi.din()) + "->" +
                            std::to_string(psi.dout()) + ")");
    }
    DiamondOptions dopt;
    dopt.tol = a.tol;
    DistanceInterval diamond = diamond_norm_bounds(phi, psi, dopt);
    std::vector<std::vector<std::string>> rows;
    auto row = [](const std::string& name, const DistanceInterval& iv) {
        return std::vector<std::string>{name,           format_real(iv.lower), format_real(iv.upper),
                                        iv.lower_method, iv.upper_method,       iv.certified ? "1" : "0"};
    };
    if (a.method == "diamond" || a.method == "both") {
        rows.push_back(row("diamond", diamond));
    }
    bool sandwich = true;
    if (a.method == "bures" || a.method == "both") {
        BuresOptions bopt;
        bopt.diamond = dopt;
        DistanceInterval bures = bures_distance(phi, psi, bopt);
        rows.push_back(row("bures", bures));
        sandwich = 0.5 * diamond.lower <= bures.upper + 1e-9 && bures.lower <= std::sqrt(diamond.upper) + 1e-9;
    }
    write_table(out, {"quantity", "lower", "upper", "lower_method", "upper_method", "certified"}, rows, fmt);
    err << "sandwich " << (sandwich ? "ok" : "VIOLATED") << "\n";
    return sandwich ? kExitOk : kExitViolations;
}

int cmd_capacity(const FamilyArgs& a, std::ostream& out) {
    if (a.family != "erasure") {
        throw ArgumentError("capacity: closed forms exist only for the erasure family");
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [kind, v] : erasure_capacities(a.d, a.p)) {
        rows.push_back({to_string(kind), format_real(v.value), to_string(v.tag)});
    }
    write_table(out, {"kind", "value_bits", "tag"}, rows, parse_table_format(a.format));
    return kExitOk;
}

int cmd_channel(const FamilyArgs& a, std::ostream& out) {
    Channel ch = Channel::identity(a.d);
    if (a.family == "erasure") {
        ch = erasure_channel(a.d, a.p);
    } else if (a.family == "depolarizing") {
        ch = Channel::completely_depolarizing(a.d);
    } else if (a.family != "identity") {
        throw ArgumentError("channel: unknown family '" + a.family + "'");
    }
    if (a.out.empty()) {
        out << channel_to_json(ch);
    } else {
        write_channel_file(a.out, ch);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Continuity-bound laboratory for quantum channels", "qcb"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Fuzz one bound family and emit a report row per inequality");
    c->add_option("bound", check.bound, "prop1, prop1-qc, prop2, prop3, prop4, prop5 or aux")
        ->required()
        ->check(CLI::IsMember(campaign_bounds()));
    c->add_option("--trials", check.trials, "Number of random instances")->check(CLI::PositiveNumber);
    c->add_option("--seed", check.seed, "Campaign seed")->envname("QCB_SEED");
    c->add_option("--dims", check.dims, "Fixed dimensions, e.g. A=2,B=2,C=2,E=2");
    c->add_flag("--same-channel", check.same_channel, "Use phi = psi");
    c->add_flag("--same-state", check.same_state, "Use rho = sigma");
    c->add_flag("--same-ensemble", check.same_ensemble, "Use e = f");
    c->add_option("--n", check.n, "Channel copies for prop4")->check(CLI::PositiveNumber);
    c->add_option("--m", check.m, "Ensemble size (0 draws 1..4)");
    c->add_option("--kraus", check.kraus, "Kraus rank of random channels (0 draws 1..4)");
    c->add_option("--eps-source", check.eps_source, "Epsilon provenance for prop5")
        ->check(CLI::IsMember({"interval-upper", "analytic"}));
    c->add_option("--out", check.out, "Write the table here instead of stdout");
    c->add_option("--format", check.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
    c->add_flag("--serial", check.serial, "Run trials one after another (reference path)");

    TightnessArgs tight;
    auto* t = app.add_subcommand("tightness", "Closed-form tightness sweep on the erasure family");
    t->add_option("--family", tight.family, "Channel family")->check(CLI::IsMember({"erasure"}));
    t->add_option("--log2d", tight.log2d, "log2 of the input dimension (comma separated)")->delimiter(',');
    t->add_option("--d", tight.d, "Input dimensions (comma separated)")->delimiter(',');
    t->add_option("--x", tight.x, "Offsets x in [0, 1/2] (comma separated)")->delimiter(',');
    t->add_option("--out", tight.out, "Write the table here instead of stdout");
    t->add_option("--format", tight.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));

    DistanceArgs dist;
    auto* d = app.add_subcommand("distance", "Diamond and Bures enclosures for two channel files");
    d->add_option("a", dist.a, "First channel file")->required();
    d->add_option("b", dist.b, "Second channel file")->required();
    d->add_option("--method", dist.method, "diamond, bures or both")
        ->check(CLI::IsMember({"diamond", "bures", "both"}));
    d->add_option("--tol", dist.tol, "Diamond-norm gap tolerance")->check(CLI::PositiveNumber);
    d->add_option("--format", dist.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));

    FamilyArgs cap;
    auto* k = app.add_subcommand("capacity", "Closed-form capacities of the erasure family");
    k->add_option("--family", cap.family, "Channel family")->check(CLI::IsMember({"erasure"}));
    k->add_option("--d", cap.d, "Input dimension")->check(CLI::Range(2, 1 << 30));
    k->add_option("--p", cap.p, "Erasure probability")->check(CLI::Range(0.0, 1.0));
    k->add_option("--format", cap.format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));

    FamilyArgs chan;
    auto* w = app.add_subcommand("channel", "Write a channel file for a named family");
    w->add_option("--family", chan.family, "erasure, identity or depolarizing")
        ->check(CLI::IsMember({"erasure", "identity", "depolarizing"}));
    w->add_option("--d", chan.d, "Input dimension")->check(CLI::Range(1, 64));
    w->add_option("--p", chan.p, "Erasure probability")->check(CLI::Range(0.0, 1.0));
    w->add_option("--out", chan.out, "Destination file (stdout when omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c->parsed()) {
            return cmd_check(check, out, err);
        }
        if (t->parsed()) {
            return cmd_tightness(tight, out);
        }
        if (d->parsed()) {
            return cmd_distance(dist, out, err);
        }
        if (k->parsed()) {
            return cmd_capacity(cap, out);
        }
        if (w->parsed()) {
            return cmd_channel(chan, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qcb::cli
