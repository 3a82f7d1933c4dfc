// Copyright 2026 The agentaudit Authors.
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


#ifndef AGENTAUDIT_CLI_H_
#define AGENTAUDIT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace agentaudit {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIngest = 2,
  kExitParseFailures = 3,
  kExitDegenerate = 4,
};

// Runs the command line `args` (without the program name). Documents go to
// `out` unless an output path is given; diagnostics go to `err`.
// `out_is_terminal` selects the readable format when none is requested.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool out_is_terminal = false);

}  // namespace agentaudit

#endif  // AGENTAUDIT_CLI_H_
