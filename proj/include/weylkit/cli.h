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

#ifndef WEYLKIT_CLI_H
#define WEYLKIT_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace weylkit::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kDomainError = 3,
};

inline constexpr size_t kMinDim = 2;
inline constexpr size_t kMaxDim = 32;
inline constexpr size_t kDensityWarnDim = 12;

/// Runs `weylkit <args...>`. Artifacts addressed as "-" go to `out`;
/// diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace weylkit::cli

#endif  // WEYLKIT_CLI_H
