// Copyright 2026 The weylkit Authors
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

#ifndef WEYLKIT_ERRORS_H
#define WEYLKIT_ERRORS_H

#include <stdexcept>
#include <string>

namespace weylkit {

/// Operand shapes are incompatible (e.g. matmul with a.cols != b.rows).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the domain of the operation (d < 1, negative weight, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A value failed an invariant check (density matrix, gamma normalization, isometry).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A result produced from validated inputs failed its own invariant.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed input document. The message carries the offending field or position.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace weylkit

#endif  // WEYLKIT_ERRORS_H
