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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcb/bounds.hpp"

namespace qcb {

/// One fuzz campaign: `trials` independent instances of one bound family, trial k
/// drawn from Rng::child_seed(seed, k).
struct CampaignConfig {
    /// prop1, prop1-qc, prop2, prop3, prop4, prop5 or aux.
    std::string bound = "prop1";
    std::size_t trials = 100;
    uint64_t seed = 7;
    /// Fixed subsystem dimensions by label; families draw unset ones at random.
    std::map<std::string, std::size_t> dims;
    bool same_channel = false;
    bool same_state = false;
    bool same_ensemble = false;
    /// Copies for prop4.
    int n = 2;
    /// Ensemble size (prop2) and Kraus rank of random channels; 0 draws 1..4.
    std::size_t m = 0;
    std::size_t kraus = 0;
    /// prop5 only: use the closed-form Bures bound on (1/2 - x, 1/2) pairs.
    bool analytic_eps = false;
};

/// Names accepted in CampaignConfig::bound.
const std::vector<std::string>& campaign_bounds();

/// Throws ArgumentError on an unknown bound, zero trials, or bad dims.
void validate(const CampaignConfig& cfg);

/// Reports of a single trial (several for prop5 and aux).
std::vector<BoundReport> run_trial(const CampaignConfig& cfg, std::size_t trial);

struct CampaignResult {
    std::vector<BoundReport> reports;
    std::size_t violations = 0;
    /// Most negative margin seen (0 when none is negative).
    double worst_margin = 0;
};

/// Trials run concurrently (OpenMP); reports are merged by trial index, so the
/// output does not depend on the thread count.
CampaignResult run_campaign(const CampaignConfig& cfg);
/// Reference implementation: one trial after another.
CampaignResult run_campaign_serial(const CampaignConfig& cfg);

}  // namespace qcb
