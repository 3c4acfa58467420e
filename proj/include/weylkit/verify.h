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

#ifndef WEYLKIT_VERIFY_H
#define WEYLKIT_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

#include "weylkit/random.h"
#include "weylkit/serialize.h"
#include "weylkit/tolerances.h"

namespace weylkit {

struct CheckResult {
    std::string name;
    size_t d;
    bool pass;
    double residual;
    double tolerance;
    double wall_time_s;
};

struct VerifyReport {
    uint64_t seed;
    std::vector<size_t> dims;
    std::vector<CheckResult> checks;  // sorted by (name, d)

    bool pass() const;
};

struct VerifyOptions {
    uint64_t seed = random::kDefaultSeed;
    Tolerances tol;
    /// Flips the sign of one entry of X_1 Z_0 in the basis under test.
    bool inject_phase_fault = false;
    /// Omit wall times from the JSON so reports compare byte for byte.
    bool include_timing = true;
};

/// Runs the invariant suite for each d: orthogonality, trace character,
/// unitarity, Weyl commutation, decomposition round trip and Parseval,
/// rank-one coefficients, Lie closure, isometry, Weyl-form reassembly,
/// dilation vs. partial trace, trace preservation, depolarizing limit,
/// uniform-gamma Choi match, and Kraus mixing invariance.
VerifyReport run_verify(const std::vector<size_t> &dims, const VerifyOptions &options = {});

io::Json to_json(const VerifyReport &report, bool include_timing = true);
/// Fixed-width text table, one line per check.
std::string to_table(const VerifyReport &report);

}  // namespace weylkit

#endif  // WEYLKIT_VERIFY_H
