// Copyright 2026 The truthful-arch Authors
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

#ifndef TRUTHFUL_ARCH_CLI_H_
#define TRUTHFUL_ARCH_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace truthful_arch {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;

// Entry point of the truthful-arch tool. `args` excludes the program name.
// Subcommands:
//
//   select   --mechanism <id> [--dictator <i>] --scenario <path>
//            [--net-benefit-basis actual|reported] [--format text|csv|json]
//   analyze  --mechanism <id> [--dictator <i>] --scenario <path>
//            --manipulators <ids> [--objective benefit|net_benefit]
//            [--grid-step <r>] [--threads <k>] [--weak-coalition]
//   gs-scan  --rule plurality|borda|dictatorship [--dictator <i>]
//            --voters <n> [--alternatives 3]
//   validate --scenario <path>   (prints the canonical scenario JSON)
//
// Returns kExitOk on success and kExitError on any usage, I/O or
// validation error (message on `err`).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace truthful_arch

#endif  // TRUTHFUL_ARCH_CLI_H_
