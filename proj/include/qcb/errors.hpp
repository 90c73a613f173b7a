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

#include <stdexcept>
#include <string>

namespace qcb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: unknown labels, dimension mismatches, out-of-domain scalars.
class ArgumentError : public Error {
   public:
    using Error::Error;
};

/// A documented precondition on a mathematical object failed (non-Hermitian input,
/// non-trace-preserving Kraus list, invalid state).
class ContractError : public Error {
   public:
    using Error::Error;
};

/// Ambient dimension exceeds the configured cap.
class SizeError : public Error {
   public:
    using Error::Error;
};

}  // namespace qcb
