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

#ifndef AGENTAUDIT_PROCESS_H_
#define AGENTAUDIT_PROCESS_H_

#include <filesystem>
#include <string>
#include <vector>

namespace agentaudit {

struct ProcessResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

// Runs argv[0] from PATH without a shell. Inherits the environment.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::filesystem::path& cwd = {});

}  // namespace agentaudit

#endif  // AGENTAUDIT_PROCESS_H_
