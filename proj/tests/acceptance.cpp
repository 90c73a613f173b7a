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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qcb/bounds.hpp"
#include "qcb/capacities.hpp"
#include "qcb/distances.hpp"
#include "qcb/fuzz.hpp"
#include "qcb/instances.hpp"
#include "qcb/linalg.hpp"

namespace {

using namespace qcb;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CampaignResult campaign(const std::string& bound, std::size_t trials, uint64_t seed,
                        const std::function<void(CampaignConfig&)>& tweak = {}) {
    CampaignConfig cfg;
    cfg.bound = bound;
    cfg.trials = trials;
    cfg.seed = seed;
    if (tweak) {
        tweak(cfg);
    }
    return run_campaign(cfg);
}

std::string campaign_detail(const std::string& name, const CampaignResult& r) {
    return name + " " + std::to_string(r.reports.size()) + " reports " + std::to_string(r.violations) +
           " violations";
}

Outcome prop1_fuzz() {
    auto t0 = std::chrono::steady_clock::now();
    CampaignResult r = campaign("prop1", 500, 101, [](CampaignConfig& c) {
        c.dims = {{"A", 2}, {"B", 2}, {"C", 2}, {"E", 2}};
    });
    double secs = seconds_since(t0);
    return {r.violations == 0 && r.reports.size() == 500 && secs < 120.0,
            campaign_detail("prop1", r) + fmt(", %.1f s", secs)};
}

Outcome prop2_fuzz() {
    CampaignResult general = campaign("prop2", 300, 102);
    CampaignResult same = campaign("prop2", 300, 103, [](CampaignConfig& c) { c.same_channel = true; });
    bool ids_ok = true;
    for (const auto& r : same.reports) {
        ids_ok = ids_ok && r.bound.rfind("prop2-same-channel", 0) == 0;
    }
    return {general.violations == 0 && same.violations == 0 && ids_ok,
            campaign_detail("prop2", general) + "; " + campaign_detail("same-channel", same)};
}

Outcome prop3_prop4_fuzz() {
    CampaignResult p3 = campaign("prop3", 300, 104);
    CampaignResult p4 = campaign("prop4", 100, 105, [](CampaignConfig& c) { c.n = 2; });
    return {p3.violations == 0 && p4.violations == 0 && p3.reports.size() == 300 && p4.reports.size() == 100,
            campaign_detail("prop3", p3) + "; " + campaign_detail("prop4 n=2", p4)};
}

Outcome chi_rep() {
    Rng rng(106);
    double worst = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t d = 1 + rng.below(4);
        std::size_t m = 1 + rng.below(4);
        Ensemble e = random_ensemble(d, m, rng);
        DensityMatrix w = qc_state(e, "B");
        worst = std::max(worst, std::abs(holevo_quantity(e) - mutual_information(w, {"A"}, {"B"})));
    }
    return {worst < 1e-9, fmt("max |chi - I(A:B)| = %.3g over 200 ensembles", worst)};
}

Outcome entropic_axioms() {
    Rng rng(107);
    SubsystemShape four = SubsystemShape::parse("A=2,B=2,C=2,D=2");
    double chain = 0;
    double ssa = INFINITY;
    double fcb = INFINITY;
    for (int t = 0; t < 200; ++t) {
        DensityMatrix w = random_density(four, rng);
        chain = std::max(chain, std::abs(chain_rule_defect(w, {"A"}, {"B"}, {"C"}, {"D"})));
        ssa = std::min(ssa, cmi(w.marginal({"A", "B", "C"}), {"A"}, {"B"}, {"C"}));
        auto [rho, sigma] = random_state_pair(SubsystemShape::parse("A=2,B=2,C=2"), rng);
        double lambda = rng.uniform(0.01, 0.99);
        BoundReport r = check_almost_convexity(rho, sigma, lambda, {"A"}, {"B"}, {"C"});
        fcb = std::min(fcb, r.margin);
    }
    CampaignResult aux = campaign("aux", 200, 108);
    std::size_t aux_violations = 0;
    for (const auto& r : aux.reports) {
        if (r.bound == "mi-ub" || r.bound == "mi-ub-sep" || r.bound == "cmi-ub" || r.bound.rfind("chi-cb", 0) == 0) {
            aux_violations += r.violated;
        }
    }
    // same-state ensemble pairs exercise the sharper Holevo continuity constant
    std::size_t same_violations = 0;
    for (int t = 0; t < 200; ++t) {
        Ensemble e = random_ensemble(1 + rng.below(4), 1 + rng.below(4), rng);
        std::vector<double> q(e.size());
        double total = 0;
        for (auto& x : q) {
            x = rng.uniform() + 0.01;
            total += x;
        }
        for (auto& x : q) {
            x /= total;
        }
        BoundReport r = check_chi_continuity(e, Ensemble(q, e.states()));
        same_violations += r.violated || r.bound != "chi-cb-same-states";
    }
    bool pass = chain <= 1e-9 && ssa >= -1e-9 && fcb >= -1e-9 && aux_violations == 0 && same_violations == 0;
    return {pass, fmt("chain %.2g", chain) + fmt(", min CMI %.2g", ssa) + fmt(", min F-c-b margin %.3g", fcb) +
                      ", aux violations " + std::to_string(aux_violations) + ", same-state chi violations " +
                      std::to_string(same_violations)};
}

Outcome erasure_closed_forms() {
    auto c = erasure_capacities(4, 0.25);
    double err = std::max(std::abs(c.at(CapacityKind::classical).value - 1.5),
                          std::abs(c.at(CapacityKind::quantum).value - 1.0));
    double sweep = 0;
    for (std::size_t d : {2, 4, 8}) {
        for (double x : {0.01, 0.05, 0.1}) {
            double gap = erasure_capacities(d, 0.5 - x).at(CapacityKind::quantum).value -
                         erasure_capacities(d, 0.5).at(CapacityKind::quantum).value;
            sweep = std::max(sweep, std::abs(gap - 2 * x * std::log2(static_cast<double>(d))));
        }
    }
    return {err <= 1e-12 && sweep <= 1e-12, fmt("d=4 p=1/4 error %.2g", err) + fmt(", sweep error %.2g", sweep)};
}

Outcome isometry_distance_closed_form() {
    double worst = 0;
    double ratio_lo = 1e9;
    double ratio_hi = 0;
    for (std::size_t d : {2, 3}) {
        for (double x : {0.05, 0.1, 0.2}) {
            double numeric = operator_norm(erasure_stinespring(d, 0.5 - x) - erasure_stinespring(d, 0.5));
            double closed = std::sqrt(2 - std::sqrt(1 - 2 * x) - std::sqrt(1 + 2 * x));
            worst = std::max(worst, std::abs(numeric - closed));
        }
        double ratio = operator_norm(erasure_stinespring(d, 0.49) - erasure_stinespring(d, 0.5)) / 0.01;
        ratio_lo = std::min(ratio_lo, ratio);
        ratio_hi = std::max(ratio_hi, ratio);
    }
    return {worst <= 1e-9 && ratio_lo >= 0.99 && ratio_hi <= 1.01,
            fmt("max deviation %.2g", worst) + fmt(", ratio at x=0.01 in [%.6f", ratio_lo) + fmt(", %.6f]", ratio_hi)};
}

Outcome tightness() {
    double r10 = tightness_row(1e-3, 10).ratio;
    double r100 = tightness_row(1e-3, 100).ratio;
    double r1000 = tightness_row(1e-3, 1000).ratio;
    return {r1000 >= 0.9 && r10 <= r100 && r100 <= r1000,
            fmt("R(1e-3, 10) = %.6f", r10) + fmt(", R(1e-3, 100) = %.6f", r100) +
                fmt(", R(1e-3, 1000) = %.6f", r1000)};
}

Outcome distance_machinery() {
    Rng rng(109);
    double widest = 0;
    double self_upper = 0;
    std::size_t sandwich_failures = 0;
    for (int t = 0; t < 50; ++t) {
        Channel a = random_channel(2, 2, 1 + rng.below(4), rng);
        Channel b = rng.uniform() < 0.5 ? random_channel(2, 2, 1 + rng.below(4), rng)
                                        : perturb_channel(a, log_uniform(rng, 1e-3, 1.0), rng);
        DistanceInterval dn = diamond_norm_bounds(a, b);
        widest = std::max(widest, dn.width());
        DistanceInterval br = bures_distance(a, b);
        bool ok = dn.lower <= dn.upper && br.lower <= br.upper && 0.5 * dn.lower <= br.upper + 1e-9 &&
                  br.lower <= std::sqrt(dn.upper) + 1e-9;
        sandwich_failures += !ok;
        self_upper = std::max(self_upper, diamond_norm_bounds(a, a).upper);
    }
    // Bell-probe oracle: trace norm of Phi+ - I/4 from its spectrum {3/4, -1/4, -1/4, -1/4}
    std::vector<double> spectrum{0.75, -0.25, -0.25, -0.25};
    double oracle = 0;
    for (double s : spectrum) {
        oracle += std::abs(s);
    }
    DistanceInterval dep = diamond_norm_bounds(Channel::identity(2), Channel::completely_depolarizing(2));
    bool pass = widest <= 1e-4 && self_upper <= 1e-7 && sandwich_failures == 0 && dep.lower >= oracle - 1e-4;
    return {pass, fmt("max width %.2g", widest) + fmt(", self upper %.2g", self_upper) + ", sandwich failures " +
                      std::to_string(sandwich_failures) + fmt(", id vs depolarizing lower %.9f", dep.lower)};
}

Outcome ea_capacity_values() {
    double id_err = std::abs(ea_capacity(Channel::identity(2)).value - 2.0);
    double worst = 0;
    for (std::size_t d : {2, 3}) {
        for (double p : {0.1, 0.5, 0.9}) {
            Channel ch = erasure_channel(d, p);
            ComplexMatrix mm = ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d));
            worst = std::max(worst, std::abs(ea_capacity(ch).value - mutual_info_entropic(ch, mm)));
        }
    }
    return {id_err <= 1e-6 && worst <= 1e-6, fmt("identity error %.2g", id_err) + fmt(", erasure max error %.2g", worst)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"prop1-fuzz", prop1_fuzz},
        {"prop2-fuzz", prop2_fuzz},
        {"prop3-prop4-fuzz", prop3_prop4_fuzz},
        {"chi-rep", chi_rep},
        {"entropic-axioms", entropic_axioms},
        {"erasure-closed-forms", erasure_closed_forms},
        {"isometry-distance", isometry_distance_closed_form},
        {"tightness", tightness},
        {"distance-machinery", distance_machinery},
        {"ea-capacity", ea_capacity_values},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %2d %-22s %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
