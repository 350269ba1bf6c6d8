// Copyright 2026 The Imbalance Authors
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

// Command-line front end: argument parsing, file I/O and exit codes.

#ifndef IMBALANCE_TOOLS_CLI_H_
#define IMBALANCE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace imbalance::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,  // parse, format and domain errors
  kStructural = 3,
  kSizeCap = 4,
  kInternal = 5,
};

// Runs one command. `args` excludes the program name. Data goes to `out`,
// diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace imbalance::cli

#endif  // IMBALANCE_TOOLS_CLI_H_
