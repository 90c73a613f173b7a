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

#include "qcb/kernels.hpp"

#include <cstdint>

#include "qcb/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcb::kernels {

namespace {

void check_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ArgumentError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + ")");
    }
}

void check_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() * b.rows() > kAmbientCap || a.cols() * b.cols() > kAmbientCap) {
        throw SizeError("tensor: ambient dimension exceeds cap of " + std::to_string(kAmbientCap));
    }
}

}  // namespace

TracePlan make_trace_plan(const std::vector<std::size_t>& dims, const std::vector<bool>& keep) {
    if (dims.size() != keep.size()) {
        throw ArgumentError("trace plan: dims/keep length mismatch");
    }
    TracePlan plan;
    plan.kept = 1;
    plan.traced = 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        total *= dims[i];
        (keep[i] ? plan.kept : plan.traced) *= dims[i];
    }
    plan.full_index.assign(total, 0);
    // Walk the ambient basis in mixed radix, splitting digits into kept/traced parts.
    std::vector<std::size_t> digit(dims.size(), 0);
    for (std::size_t full = 0; full < total; ++full) {
        std::size_t k = 0;
        std::size_t t = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (keep[i]) {
                k = k * dims[i] + digit[i];
            } else {
                t = t * dims[i] + digit[i];
            }
        }
        plan.full_index[t * plan.kept + k] = full;
        for (std::size_t i = dims.size(); i-- > 0;) {
            if (++digit[i] < dims[i]) {
                break;
            }
            digit[i] = 0;
        }
    }
    return plan;
}

namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_matmul(a, b);
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t n = a.cols();
    const std::size_t m = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_kron(a, b);
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const TracePlan& plan) {
    ComplexMatrix r(plan.kept, plan.kept);
    for (std::size_t t = 0; t < plan.traced; ++t) {
        const std::size_t* row = plan.full_index.data() + t * plan.kept;
        for (std::size_t k1 = 0; k1 < plan.kept; ++k1) {
            for (std::size_t k2 = 0; k2 < plan.kept; ++k2) {
                r(k1, k2) += m(row[k1], row[k2]);
            }
        }
    }
    return r;
}

}  // namespace serial

namespace parallel {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_matmul(a, b);
    ComplexMatrix c(a.rows(), b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(a.rows());
    const std::size_t n = a.cols();
    const std::size_t m = b.cols();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < m; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_kron(a, b);
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    const std::int64_t rows = static_cast<std::int64_t>(c.rows());
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < rows; ++r) {
        const std::size_t i = static_cast<std::size_t>(r) / b.rows();
        const std::size_t k = static_cast<std::size_t>(r) % b.rows();
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t l = 0; l < b.cols(); ++l) {
                c(r, j * b.cols() + l) = aij * b(k, l);
            }
        }
    }
    return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const TracePlan& plan) {
    ComplexMatrix r(plan.kept, plan.kept);
    const std::int64_t kept = static_cast<std::int64_t>(plan.kept);
    // Rows of the result are independent; the traced sum runs inside each row.
#pragma omp parallel for schedule(static)
    for (std::int64_t k1 = 0; k1 < kept; ++k1) {
        for (std::size_t t = 0; t < plan.traced; ++t) {
            const std::size_t* row = plan.full_index.data() + t * plan.kept;
            const std::size_t i1 = row[k1];
            for (std::size_t k2 = 0; k2 < plan.kept; ++k2) {
                r(k1, k2) += m(i1, row[k2]);
            }
        }
    }
    return r;
}

}  // namespace parallel

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() * a.cols() * b.cols() >= kParallelThreshold && max_threads() > 1) {
        return parallel::matmul(a, b);
    }
    return serial::matmul(a, b);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.size() * b.size() >= kParallelThreshold && max_threads() > 1) {
        return parallel::kron(a, b);
    }
    return serial::kron(a, b);
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const TracePlan& plan) {
    if (plan.kept * plan.kept * plan.traced >= kParallelThreshold && max_threads() > 1) {
        return parallel::partial_trace(m, plan);
    }
    return serial::partial_trace(m, plan);
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qcb::kernels
