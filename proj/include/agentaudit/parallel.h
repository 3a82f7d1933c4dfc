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

#ifndef AGENTAUDIT_PARALLEL_H_
#define AGENTAUDIT_PARALLEL_H_

// Data-parallel kernels over the files of a manifest. Each kernel has an
// OpenMP version and a serial reference with identical output; results are
// always in input order regardless of scheduling.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agentaudit/ingest.h"
#include "agentaudit/scanner.h"

namespace agentaudit {

struct HashResult {
  std::optional<std::string> hash;  // unset when the file could not be read
  std::uint64_t size = 0;
  bool binary = false;
  std::string error;
};

HashResult HashOneFile(const std::filesystem::path& path);

std::vector<HashResult> HashFiles(const std::filesystem::path& root,
                                  std::span<const std::string> paths);
std::vector<HashResult> HashFilesSerial(const std::filesystem::path& root,
                                        std::span<const std::string> paths);

// Scans every host-language file; kOther files get an empty FileScan.
std::vector<FileScan> ScanFiles(const std::filesystem::path& root,
                                std::span<const SourceFile> files, const FlagMatcher& matcher);
std::vector<FileScan> ScanFilesSerial(const std::filesystem::path& root,
                                      std::span<const SourceFile> files,
                                      const FlagMatcher& matcher);

// Overrides the OpenMP thread count for the kernels above; 0 restores the
// runtime default.
void SetKernelThreads(int threads);

}  // namespace agentaudit

#endif  // AGENTAUDIT_PARALLEL_H_
