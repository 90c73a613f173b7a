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
#include <optional>

namespace qcb {

/// Counter-based 64-bit generator. Output k is a SplitMix64 finalizer applied to
/// seed + k * golden-gamma, so a stream is fully determined by (seed, position).
/// Instances are single-owner; parallel workers derive children with child().
class Rng {
   public:
    explicit Rng(uint64_t seed) : seed_(seed) {}

    uint64_t seed() const { return seed_; }
    uint64_t position() const { return counter_; }

    uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n);
    /// Standard normal via Box-Muller.
    double normal();

    /// Independent stream keyed by index; does not advance this generator.
    Rng child(uint64_t index) const { return Rng(child_seed(seed_, index)); }
    static uint64_t child_seed(uint64_t seed, uint64_t index);

   private:
    uint64_t seed_;
    uint64_t counter_ = 0;
    std::optional<double> spare_normal_;
};

uint64_t splitmix64_mix(uint64_t z);

}  // namespace qcb
