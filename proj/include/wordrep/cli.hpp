// Copyright 2026 The wordrep Authors
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

#ifndef WORDREP_CLI_HPP_
#define WORDREP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace wordrep::cli {

enum ExitCode : int {
  kVerified = 0,
  kRefuted = 1,
  kUsage = 2,
  kUnknown = 3,
};

// Environment variable holding the default node budget for searches.
inline constexpr const char* kBudgetVariable = "WORDREP_MAX_NODES";

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace wordrep::cli

#endif  // WORDREP_CLI_HPP_
