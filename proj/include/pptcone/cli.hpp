// Copyright 2025-2026 The pptcone developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace pptcone {

// Exit codes shared by every subcommand.
inline constexpr int kExitTrue = 0;          // success, or a true verdict
inline constexpr int kExitFalse = 1;         // command ran, verdict is false
inline constexpr int kExitInput = 2;         // unusable input or usage error
inline constexpr int kExitNumerical = 3;     // solver or convergence failure
inline constexpr int kExitInconclusive = 4;  // search ended without a verdict

// Runs one subcommand.  `args` is argv without the program name.  Reports
// are printed as JSON to stdout, or to the --out path when given; the
// return value is the process exit code.  All exceptions are caught and
// mapped: parse, dimension and contract problems exit 2, convergence and
// other numerical failures exit 3.  PPTCONE_SEED in the environment
// replaces the default --seed; an explicit flag still wins.
int run_command(const std::vector<std::string>& args);

}  // namespace pptcone
