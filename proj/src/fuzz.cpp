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

#include "qcb/fuzz.hpp"

#include <algorithm>
#include <exception>

#include "qcb/instances.hpp"
#include "qcb/rng.hpp"

namespace qcb {

namespace {

// Fixed dimension for `label`, or a uniform draw from `choices`.
std::size_t dim_or(const CampaignConfig& cfg, const std::string& label, std::initializer_list<std::size_t> choices,
                   Rng& rng) {
    auto it = cfg.dims.find(label);
    if (it != cfg.dims.end()) {
        return it->second;
    }
    std::vector<std::size_t> c(choices);
    return c[rng.below(c.size())];
}

std::size_t count_or(std::size_t fixed, Rng& rng) { return fixed > 0 ? fixed : 1 + rng.below(4); }

Channel partner_channel(const CampaignConfig& cfg, const Channel& phi, std::size_t kraus, Rng& rng) {
    if (cfg.same_channel) {
        return phi;
    }
    if (rng.uniform() < 0.5) {
        return random_channel(phi.din(), phi.dout(), kraus, rng);
    }
    return perturb_channel(phi, log_uniform(rng, 1e-3, 1.0), rng);
}

DensityMatrix partner_state(const CampaignConfig& cfg, const DensityMatrix& rho, Rng& rng) {
    if (cfg.same_state) {
        return rho;
    }
    if (rng.uniform() < 0.5) {
        return random_density(rho.shape(), rng);
    }
    return perturb_state(rho, log_uniform(rng, 1e-3, 1.0), rng);
}

std::vector<BoundReport> trial_prop1(const CampaignConfig& cfg, bool qc, Rng& rng) {
    const std::size_t da = dim_or(cfg, "A", {2}, rng);
    const std::size_t db = dim_or(cfg, "B", {2}, rng);
    const std::size_t dc = dim_or(cfg, "C", {2}, rng);
    const std::size_t de = dim_or(cfg, "E", {2}, rng);
    if (qc) {
        auto [rho, sigma] = random_qc_pair(da, db, dc, de, rng);
        if (cfg.same_state) {
            sigma = rho;
        }
        return {check_prop1(rho, sigma, {}, true)};
    }
    SubsystemShape shape({"A", "B", "C", "E"}, {da, db, dc, de});
    auto [rho, sigma] = random_state_pair(shape, rng);
    if (cfg.same_state) {
        sigma = rho;
    }
    return {check_prop1(rho, sigma)};
}

std::vector<BoundReport> trial_prop2(const CampaignConfig& cfg, Rng& rng) {
    const std::size_t din = dim_or(cfg, "A", {2, 3}, rng);
    const std::size_t dout = dim_or(cfg, "B", {2, 3}, rng);
    const std::size_t kraus = count_or(cfg.kraus, rng);
    const std::size_t m = count_or(cfg.m, rng);
    Channel phi = random_channel(din, dout, kraus, rng);
    Channel psi = partner_channel(cfg, phi, kraus, rng);
    Ensemble e = random_ensemble(din, m, rng);
    Ensemble f = e;
    if (!cfg.same_ensemble) {
        f = rng.uniform() < 0.5 ? random_ensemble(din, m, rng) : perturb_ensemble(e, log_uniform(rng, 1e-3, 1.0), rng);
    }
    return {check_prop2(phi, psi, e, f)};
}

std::vector<BoundReport> trial_prop3(const CampaignConfig& cfg, Rng& rng) {
    const std::size_t da = dim_or(cfg, "A", {2}, rng);
    const std::size_t dout = dim_or(cfg, "B", {2, 3}, rng);
    const std::size_t dc = dim_or(cfg, "C", {2}, rng);
    const std::size_t dd = dim_or(cfg, "D", {2}, rng);
    const std::size_t kraus = count_or(cfg.kraus, rng);
    Prop3Labels labels;
    SubsystemShape shape({"A", "C", "D"}, {da, dc, dd});
    if (dc == 1) {
        labels.c = {};
        shape = SubsystemShape({"A", "D"}, {da, dd});
    }
    Channel phi = random_channel(da, dout, kraus, rng);
    Channel psi = partner_channel(cfg, phi, kraus, rng);
    DensityMatrix rho = random_density(shape, rng);
    DensityMatrix sigma = partner_state(cfg, rho, rng);
    return {check_prop3(phi, psi, rho, sigma, labels)};
}

std::vector<BoundReport> trial_prop4(const CampaignConfig& cfg, Rng& rng) {
    const int n = cfg.n;
    const std::size_t da = dim_or(cfg, "A", {2}, rng);
    const std::size_t dout = dim_or(cfg, "B", {2}, rng);
    const std::size_t dc = dim_or(cfg, "C", {2}, rng);
    const std::size_t dd = dim_or(cfg, "D", {2}, rng);
    const std::size_t kraus = count_or(cfg.kraus, rng);
    Prop4Labels labels = Prop4Labels::numbered(n);
    LabelSet names = labels.inputs;
    std::vector<std::size_t> dims(static_cast<std::size_t>(n), da);
    if (dc > 1) {
        names.push_back("C");
        dims.push_back(dc);
    } else {
        labels.c = {};
    }
    names.push_back("D");
    dims.push_back(dd);
    Channel phi = random_channel(da, dout, kraus, rng);
    Channel psi = partner_channel(cfg, phi, kraus, rng);
    DensityMatrix rho = random_density(SubsystemShape(names, dims), rng);
    return {check_prop4(phi, psi, rho, labels)};
}

std::vector<BoundReport> trial_prop5(const CampaignConfig& cfg, Rng& rng) {
    const std::size_t d = dim_or(cfg, "A", {2, 3, 4}, rng);
    double p = 0;
    double q = 0;
    if (cfg.analytic_eps || rng.uniform() < 0.5) {
        p = 0.5 - rng.uniform(0.0, 0.5);
        q = 0.5;
    } else {
        p = rng.uniform();
        q = cfg.same_channel ? p : rng.uniform();
    }
    if (cfg.same_channel) {
        q = p;
    }
    return check_prop5_erasure(d, p, q, cfg.analytic_eps);
}

std::vector<BoundReport> trial_aux(const CampaignConfig& cfg, Rng& rng) {
    const std::size_t da = dim_or(cfg, "A", {2}, rng);
    const std::size_t db = dim_or(cfg, "B", {2}, rng);
    const std::size_t dc = dim_or(cfg, "C", {2}, rng);
    const std::size_t dd = dim_or(cfg, "D", {2}, rng);
    SubsystemShape shape({"A", "B", "C", "D"}, {da, db, dc, dd});
    DensityMatrix omega = random_density(shape, rng);
    std::vector<BoundReport> out = check_auxiliary(omega, {"A"}, {"B"}, {"C"});

    // Separable bound on the qc state of a random ensemble (classical register B).
    Ensemble e = random_ensemble(da, count_or(cfg.m, rng), rng);
    DensityMatrix qc(qc_state(e, "B"));
    for (auto& r : check_auxiliary(qc, {"A"}, {"B"}, {}, true)) {
        out.push_back(std::move(r));
    }

    DensityMatrix sigma = partner_state(cfg, omega, rng);
    out.push_back(check_almost_convexity(omega, sigma, rng.uniform(0.01, 0.99), {"A"}, {"B"}, {"C"}));

    Ensemble f = rng.uniform() < 0.5 ? random_ensemble(da, e.size(), rng)
                                     : perturb_ensemble(e, log_uniform(rng, 1e-3, 1.0), rng);
    out.push_back(check_chi_continuity(e, f));

    const double defect = chain_rule_defect(omega, {"A"}, {"B"}, {"C"}, {"D"});
    out.push_back(make_report("chain", 0, EpsProvenance::exact, std::abs(defect), 0.0, da, static_cast<double>(da)));
    return out;
}

void summarise(CampaignResult& res) {
    for (const auto& r : res.reports) {
        if (r.violated) {
            ++res.violations;
        }
        res.worst_margin = std::min(res.worst_margin, r.margin);
    }
}

}  // namespace

const std::vector<std::string>& campaign_bounds() {
    static const std::vector<std::string> names{"prop1", "prop1-qc", "prop2", "prop3", "prop4", "prop5", "aux"};
    return names;
}

void validate(const CampaignConfig& cfg) {
    const auto& names = campaign_bounds();
    if (std::find(names.begin(), names.end(), cfg.bound) == names.end()) {
        throw ArgumentError("unknown bound '" + cfg.bound + "'");
    }
    if (cfg.trials == 0) {
        throw ArgumentError("trials must be >= 1");
    }
    if (cfg.n < 1) {
        throw ArgumentError("n must be >= 1");
    }
    std::size_t total = 1;
    for (const auto& [label, d] : cfg.dims) {
        if (d == 0) {
            throw ArgumentError("dimension of '" + label + "' must be positive");
        }
        total *= d;
        if (total > kAmbientCap * kAmbientCap) {
            throw SizeError("dims exceed the ambient cap");
        }
    }
    if (cfg.analytic_eps && cfg.bound != "prop5") {
        throw ArgumentError("analytic eps is only available for prop5");
    }
}

std::vector<BoundReport> run_trial(const CampaignConfig& cfg, std::size_t trial) {
    const uint64_t seed = Rng::child_seed(cfg.seed, trial);
    Rng rng(seed);
    std::vector<BoundReport> out;
    if (cfg.bound == "prop1") {
        out = trial_prop1(cfg, false, rng);
    } else if (cfg.bound == "prop1-qc") {
        out = trial_prop1(cfg, true, rng);
    } else if (cfg.bound == "prop2") {
        out = trial_prop2(cfg, rng);
    } else if (cfg.bound == "prop3") {
        out = trial_prop3(cfg, rng);
    } else if (cfg.bound == "prop4") {
        out = trial_prop4(cfg, rng);
    } else if (cfg.bound == "prop5") {
        out = trial_prop5(cfg, rng);
    } else if (cfg.bound == "aux") {
        out = trial_aux(cfg, rng);
    } else {
        throw ArgumentError("unknown bound '" + cfg.bound + "'");
    }
    for (auto& r : out) {
        r.trial = trial;
        r.seed = seed;
    }
    return out;
}

CampaignResult run_campaign_serial(const CampaignConfig& cfg) {
    validate(cfg);
    CampaignResult res;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        for (auto& r : run_trial(cfg, t)) {
            res.reports.push_back(std::move(r));
        }
    }
    summarise(res);
    return res;
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
    validate(cfg);
    const auto trials = static_cast<std::int64_t>(cfg.trials);
    std::vector<std::vector<BoundReport>> per_trial(cfg.trials);
    std::vector<std::exception_ptr> errors(cfg.trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < trials; ++t) {
        const auto i = static_cast<std::size_t>(t);
        try {
            per_trial[i] = run_trial(cfg, i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    CampaignResult res;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        if (errors[t]) {
            std::rethrow_exception(errors[t]);
        }
        for (auto& r : per_trial[t]) {
            res.reports.push_back(std::move(r));
        }
    }
    summarise(res);
    return res;
}

}  // namespace qcb
