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

#include <utility>

#include "qcb/channels.hpp"
#include "qcb/ensembles.hpp"
#include "qcb/entropic.hpp"
#include "qcb/rng.hpp"

namespace qcb {

/// exp of a uniform draw in [log lo, log hi].
double log_uniform(Rng& rng, double lo, double hi);

/// Haar-random isometry din -> dout * kraus, read as a channel. `kraus` is raised
/// to ceil(din / dout) when smaller.
Channel random_channel(std::size_t din, std::size_t dout, std::size_t kraus, Rng& rng);
/// Stinespring isometry moved by `strength` along a Gaussian direction, then
/// re-orthonormalised; dimensions are kept.
Channel perturb_channel(const Channel& ch, double strength, Rng& rng);

/// Random state on `shape`; rank 0 draws the rank uniformly from 1..dim.
DensityMatrix random_density(const SubsystemShape& shape, Rng& rng, std::size_t rank = 0);
/// (1 - t) rho + t tau with tau random on the same shape.
DensityMatrix perturb_state(const DensityMatrix& rho, double t, Rng& rng);

/// m random states of random rank on a single factor `label` with Dirichlet-like weights.
Ensemble random_ensemble(std::size_t dim, std::size_t m, Rng& rng, const std::string& label = "A");
/// Weights and states each mixed with fresh random ones at strength t.
Ensemble perturb_ensemble(const Ensemble& e, double t, Rng& rng);

/// Either two independent states or a state and a perturbation of it (strength
/// log-uniform in [1e-3, 1]), chosen at random.
std::pair<DensityMatrix, DensityMatrix> random_state_pair(const SubsystemShape& shape, Rng& rng);

/// Pair of qc states sum_i p_i tau_i^{AE} (x) |i><i|_{BC} on the shape (A, E, B, C).
std::pair<DensityMatrix, DensityMatrix> random_qc_pair(std::size_t da, std::size_t db, std::size_t dc, std::size_t de,
                                                       Rng& rng);

}  // namespace qcb
