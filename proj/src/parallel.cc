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

#include "agentaudit/parallel.h"

#include <omp.h>

#include <atomic>
#include <fstream>
#include <iterator>

#include "agentaudit/hashing.h"

namespace agentaudit {
namespace {

std::atomic<int> g_threads{0};

int Threads() {
  const int t = g_threads.load();
  return t > 0 ? t : omp_get_max_threads();
}

std::optional<std::string> ReadFile(const std::filesystem::path& path, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open file";
    return std::nullopt;
  }
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    error = "read error";
    return std::nullopt;
  }
  return bytes;
}

FileScan ScanOne(const std::filesystem::path& root, const SourceFile& file,
                 const FlagMatcher& matcher) {
  if (file.language != LanguageTag::kHost) return {};
  std::string error;
  const auto bytes = ReadFile(root / file.path, error);
  if (!bytes) {
    FileScan out;
    out.warnings.push_back({file.path, 0, 0, error});
    return out;
  }
  return ScanFile(*bytes, file.path, matcher);
}

}  // namespace

void SetKernelThreads(int threads) { g_threads.store(threads < 0 ? 0 : threads); }

HashResult HashOneFile(const std::filesystem::path& path) {
  HashResult out;
  const auto bytes = ReadFile(path, out.error);
  if (!bytes) return out;
  out.size = bytes->size();
  const std::size_t probe = std::min<std::size_t>(bytes->size(), 8192);
  out.binary = bytes->find('\0') < probe;
  out.hash = Sha256Hex(*bytes);
  return out;
}

std::vector<HashResult> HashFilesSerial(const std::filesystem::path& root,
                                        std::span<const std::string> paths) {
  std::vector<HashResult> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(HashOneFile(root / p));
  return out;
}

std::vector<HashResult> HashFiles(const std::filesystem::path& root,
                                  std::span<const std::string> paths) {
  std::vector<HashResult> out(paths.size());
  const auto n = static_cast<std::ptrdiff_t>(paths.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(Threads())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = HashOneFile(root / paths[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<FileScan> ScanFilesSerial(const std::filesystem::path& root,
                                      std::span<const SourceFile> files,
                                      const FlagMatcher& matcher) {
  std::vector<FileScan> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(ScanOne(root, f, matcher));
  return out;
}

std::vector<FileScan> ScanFiles(const std::filesystem::path& root,
                                std::span<const SourceFile> files, const FlagMatcher& matcher) {
  std::vector<FileScan> out(files.size());
  const auto n = static_cast<std::ptrdiff_t>(files.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(Threads())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = ScanOne(root, files[static_cast<std::size_t>(i)], matcher);
  }
  return out;
}

}  // namespace agentaudit
