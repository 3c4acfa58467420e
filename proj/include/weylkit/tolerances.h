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

#ifndef WEYLKIT_TOLERANCES_H
#define WEYLKIT_TOLERANCES_H

#include <string_view>

namespace weylkit {

/// Floating-point slack for the invariant checks. Every field can be
/// overridden by name (see `set_tolerance`), e.g. from `--tol psd=1e-8`.
struct Tolerances {
    double norm = 1e-10;    // unit norm, unit trace, column normalization
    double herm = 1e-10;    // max |a - a^dagger| entry
    double psd = 1e-9;      // minimum eigenvalue >= -psd
    double jacobi = 1e-12;  // off-diagonal Frobenius mass at Jacobi convergence
    double cptp = 1e-9;     // || sum E^dagger E - I ||_F
    double prune = 1e-12;   // Kraus operators below this Frobenius norm are dropped
};

/// Sets the tolerance named `name` (norm, herm, psd, jacobi, cptp, prune).
/// Returns false if the name is unknown or the value is not positive.
bool set_tolerance(Tolerances &tol, std::string_view name, double value);

}  // namespace weylkit

#endif  // WEYLKIT_TOLERANCES_H
