// Copyright 2026 The rspm Authors
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


#ifndef RSPM_CLI_HPP
#define RSPM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rspm {

inline constexpr int kExitOk = 0;
/// An asserted invariant or statistical check failed.
inline constexpr int kExitInvariant = 1;
/// Unknown flag, inconsistent configuration or invalid input.
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace rspm

#endif  // RSPM_CLI_HPP
