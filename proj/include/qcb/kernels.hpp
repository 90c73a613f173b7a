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

// Dense data-parallel kernels. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel; the unqualified
// entry points pick one by problem size. Tests pin parallel == serial, and
// bench/ compares their throughput.

#include <cstddef>
#include <vector>

#include "qcb/matrix.hpp"

namespace qcb::kernels {

/// Work (in complex multiply-adds) below which dispatch stays serial.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 18;

/// Index table for a partial trace: full_index[t * kept + k] is the ambient
/// index of kept-basis state k combined with traced-basis state t.
struct TracePlan {
    std::size_t kept = 0;
    std::size_t traced = 0;
    std::vector<std::size_t> full_index;
};

/// Plan for tracing out every factor whose keep[i] is false.
TracePlan make_trace_plan(const std::vector<std::size_t>& dims, const std::vector<bool>& keep);

namespace serial {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace(const ComplexMatrix& m, const TracePlan& plan);
}  // namespace serial

namespace parallel {
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace(const ComplexMatrix& m, const TracePlan& plan);
}  // namespace parallel

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace(const ComplexMatrix& m, const TracePlan& plan);

/// Number of OpenMP threads available (1 without OpenMP).
int max_threads();

}  // namespace qcb::kernels
