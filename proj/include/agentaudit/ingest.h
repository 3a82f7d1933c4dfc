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

#ifndef AGENTAUDIT_INGEST_H_
#define AGENTAUDIT_INGEST_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace agentaudit {

struct RulePack;

// A repository to audit: a local directory or a remote git URL.
struct RepoRef {
  std::string locator;
  std::optional<std::string> revision;  // commit hash or tag
  std::string name;
  // Audit only this directory of the checkout (forward slashes).
  std::optional<std::string> subdir;

  bool IsRemote() const;
  // "pinned", "non-reproducible snapshot" or "local working tree".
  std::string Reproducibility() const;
};

enum class LanguageTag { kHost, kOther };

struct SourceFile {
  std::string path;  // relative to the root, forward slashes, never ".."
  std::string content_hash;  // SHA-256, lowercase hex
  std::uint64_t byte_size = 0;
  LanguageTag language = LanguageTag::kHost;
};

struct FilterRules {
  // Host-language extensions, including the dot.
  std::vector<std::string> extensions;
  // Extra files to list as LanguageTag::kOther (config files and the like).
  std::vector<std::string> include_globs;
  // fnmatch patterns; a pattern without '/' also matches the basename.
  std::vector<std::string> exclude_globs;
  // Directory names pruned anywhere in the tree.
  std::vector<std::string> excluded_dirs = DefaultExcludedDirs();

  static std::vector<std::string> DefaultExcludedDirs();
  static FilterRules ForPack(const RulePack& pack);
};

struct IngestWarning {
  std::string path;
  std::string message;
};

struct ScanManifest {
  RepoRef repo;
  std::vector<SourceFile> files;  // strictly ascending by path
  std::optional<std::string> created_at;
  FilterRules filter_spec;
  std::vector<IngestWarning> warnings;
  std::filesystem::path root;  // where the files live; not serialized

  // SHA-256 of the canonical serialization without created_at.
  std::string Hash() const;
};

// Throws IngestError if `root` is missing or unreadable. Unreadable files
// are skipped with a warning. Binary files (a NUL byte in the first 8 KiB)
// are skipped silently.
ScanManifest EnumerateSources(const std::filesystem::path& root, const FilterRules& filters,
                              const RepoRef& repo, bool timestamp = true);

struct FetchResult {
  std::filesystem::path root;  // checkout root, or its `subdir`
  ScanManifest manifest;
};

// Materializes `ref` at its revision under `dest` using git, then
// enumerates it. The manifest's revision is the resolved commit hash.
// Throws FetchError (transport) or RevisionError (unknown revision); on
// failure `dest` is removed if this call created it.
FetchResult FetchRepository(const RepoRef& ref, const std::filesystem::path& dest,
                            const FilterRules& filters, bool timestamp = true);

nlohmann::json RepoRefToJson(const RepoRef& ref);
nlohmann::json ManifestToJson(const ScanManifest& manifest);

// ISO-8601 UTC, second resolution.
std::string CurrentTimestamp();

}  // namespace agentaudit

#endif  // AGENTAUDIT_INGEST_H_
