// Copyright 2026 The patprob Authors
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

#ifndef PATPROB_TOOLS_CLI_HPP_
#define PATPROB_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace patprob::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifiedFailure = 1,  // a checked property does not hold
  kUsage = 2,
  kIncomparable = 3,  // compare: the two inputs are not strictly ordered
};

struct Environment {
  // Enumeration budget in words; PATPROB_ENUM_BUDGET when set.
  std::uint64_t enum_budget;

  static Environment from_process();
};

// Runs one invocation. args excludes the program name. Data goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const Environment& env);

}  // namespace patprob::cli

#endif  // PATPROB_TOOLS_CLI_HPP_
