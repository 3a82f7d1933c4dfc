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

#include "agentaudit/ingest.h"

#include <fcntl.h>
#include <fnmatch.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <regex>

#include "agentaudit/errors.h"
#include "agentaudit/hashing.h"
#include "agentaudit/parallel.h"
#include "agentaudit/process.h"
#include "agentaudit/rulepack.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace agentaudit {

bool RepoRef::IsRemote() const {
  if (locator.find("://") != std::string::npos) return true;
  // scp-like syntax: user@host:path
  static const std::regex kScp(R"(^[\w.-]+@[\w.-]+:.+)");
  return std::regex_match(locator, kScp);
}

std::string RepoRef::Reproducibility() const {
  if (!IsRemote()) return "local working tree";
  return revision ? "pinned" : "non-reproducible snapshot";
}

std::vector<std::string> FilterRules::DefaultExcludedDirs() {
  return {".git", ".hg", ".svn", ".bzr", "node_modules", ".venv", "venv", "site-packages",
          "__pycache__", ".tox", ".nox", ".mypy_cache", ".pytest_cache", ".eggs", "build", "dist",
          "vendor", "third_party"};
}

FilterRules FilterRules::ForPack(const RulePack& pack) {
  FilterRules rules;
  rules.extensions = pack.extensions;
  return rules;
}

namespace {

bool GlobMatches(const std::string& pattern, const std::string& path) {
  if (fnmatch(pattern.c_str(), path.c_str(), 0) == 0) return true;
  if (pattern.find('/') == std::string::npos) {
    const auto slash = path.rfind('/');
    const std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    return fnmatch(pattern.c_str(), base.c_str(), 0) == 0;
  }
  return false;
}

bool AnyGlob(const std::vector<std::string>& patterns, const std::string& path) {
  return std::any_of(patterns.begin(), patterns.end(),
                     [&](const std::string& p) { return GlobMatches(p, path); });
}

json FilterToJson(const FilterRules& f) {
  return {{"extensions", f.extensions},
          {"include", f.include_globs},
          {"exclude", f.exclude_globs},
          {"excluded_dirs", f.excluded_dirs}};
}

json CanonicalManifest(const ScanManifest& m) {
  json files = json::array();
  for (const auto& f : m.files) {
    files.push_back({{"path", f.path},
                     {"hash", f.content_hash},
                     {"size", f.byte_size},
                     {"language", f.language == LanguageTag::kHost ? "host" : "other"}});
  }
  json warnings = json::array();
  for (const auto& w : m.warnings) warnings.push_back({{"path", w.path}, {"message", w.message}});
  return {{"repo", RepoRefToJson(m.repo)},
          {"files", files},
          {"filter_spec", FilterToJson(m.filter_spec)},
          {"warnings", warnings}};
}

}  // namespace

json RepoRefToJson(const RepoRef& ref) {
  json out = {{"locator", ref.locator}, {"name", ref.name}};
  if (ref.revision) out["revision"] = *ref.revision;
  else out["revision"] = ref.IsRemote() ? json("floating") : json(nullptr);
  if (ref.subdir) out["subdir"] = *ref.subdir;
  return out;
}

json ManifestToJson(const ScanManifest& manifest) {
  json out = CanonicalManifest(manifest);
  if (manifest.created_at) out["created_at"] = *manifest.created_at;
  return out;
}

std::string ScanManifest::Hash() const { return Sha256Hex(CanonicalManifest(*this).dump()); }

std::string CurrentTimestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ScanManifest EnumerateSources(const fs::path& root, const FilterRules& filters,
                              const RepoRef& repo, bool timestamp) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw IngestError("not a readable directory: " + root.string());
  }
  if (access(root.c_str(), R_OK | X_OK) != 0) {
    throw IngestError("directory is not readable: " + root.string());
  }

  ScanManifest manifest;
  manifest.repo = repo;
  manifest.filter_spec = filters;
  manifest.root = root;
  if (timestamp) manifest.created_at = CurrentTimestamp();

  struct Candidate {
    std::string path;
    LanguageTag language;
  };
  std::vector<Candidate> candidates;

  fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
  if (ec) throw IngestError("cannot read directory " + root.string() + ": " + ec.message());
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) {
      manifest.warnings.push_back({"", "directory walk error: " + ec.message()});
      ec.clear();
      continue;
    }
    const fs::directory_entry& entry = *it;
    const std::string rel = fs::relative(entry.path(), root, ec).generic_string();
    if (ec || rel.empty() || rel.starts_with("..")) {
      ec.clear();
      continue;
    }
    const std::string name = entry.path().filename().string();
    if (entry.is_symlink(ec)) {
      if (entry.is_directory(ec)) it.disable_recursion_pending();
      continue;
    }
    if (entry.is_directory(ec)) {
      const bool pruned = std::find(filters.excluded_dirs.begin(), filters.excluded_dirs.end(), name) !=
                              filters.excluded_dirs.end() ||
                          AnyGlob(filters.exclude_globs, rel);
      if (pruned) {
        it.disable_recursion_pending();
      } else if (access(entry.path().c_str(), R_OK | X_OK) != 0) {
        manifest.warnings.push_back({rel, "directory is not readable"});
        it.disable_recursion_pending();
      }
      continue;
    }
    if (!entry.is_regular_file(ec)) continue;
    if (AnyGlob(filters.exclude_globs, rel)) continue;
    const std::string ext = entry.path().extension().string();
    if (std::find(filters.extensions.begin(), filters.extensions.end(), ext) != filters.extensions.end()) {
      candidates.push_back({rel, LanguageTag::kHost});
    } else if (AnyGlob(filters.include_globs, rel)) {
      candidates.push_back({rel, LanguageTag::kOther});
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.path < b.path; });
  std::vector<std::string> paths;
  paths.reserve(candidates.size());
  for (const auto& c : candidates) paths.push_back(c.path);
  const std::vector<HashResult> hashes = HashFiles(root, paths);

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const HashResult& h = hashes[i];
    if (!h.hash) {
      manifest.warnings.push_back({candidates[i].path, h.error});
      continue;
    }
    if (h.binary) continue;
    manifest.files.push_back({candidates[i].path, *h.hash, h.size, candidates[i].language});
  }
  return manifest;
}

namespace {

bool LooksLikeNetworkFailure(const std::string& output) {
  static const char* kMarkers[] = {"Could not resolve host", "unable to access", "Connection refused",
                                   "Connection timed out", "Failed to connect", "Network is unreachable",
                                   "Could not read from remote repository", "does not appear to be a git repository",
                                   "Operation timed out", "SSL"};
  return std::any_of(std::begin(kMarkers), std::end(kMarkers),
                     [&](const char* m) { return output.find(m) != std::string::npos; });
}

std::string Trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

// Exclusive advisory lock on "<dest>.lock" for the lifetime of the object.
class DestinationLock {
 public:
  explicit DestinationLock(const fs::path& dest) : path_(dest.string() + ".lock") {
    fd_ = open(path_.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0 || flock(fd_, LOCK_EX | LOCK_NB) != 0) {
      if (fd_ >= 0) close(fd_);
      throw FetchError("destination is in use by another fetch: " + dest.string());
    }
  }
  ~DestinationLock() {
    flock(fd_, LOCK_UN);
    close(fd_);
    std::error_code ec;
    fs::remove(path_, ec);
  }
  DestinationLock(const DestinationLock&) = delete;
  DestinationLock& operator=(const DestinationLock&) = delete;

 private:
  std::string path_;
  int fd_ = -1;
};

}  // namespace

FetchResult FetchRepository(const RepoRef& ref, const fs::path& dest, const FilterRules& filters,
                            bool timestamp) {
  std::error_code ec;
  if (fs::exists(dest, ec) && !fs::is_empty(dest, ec)) {
    throw FetchError("destination is not empty: " + dest.string());
  }
  if (dest.has_parent_path()) fs::create_directories(dest.parent_path(), ec);
  DestinationLock lock(dest);
  const bool created = !fs::exists(dest, ec);
  fs::create_directories(dest, ec);
  if (ec) throw FetchError("cannot create " + dest.string() + ": " + ec.message());

  auto cleanup = [&] {
    std::error_code ignored;
    if (created) {
      fs::remove_all(dest, ignored);
    } else {
      for (const auto& e : fs::directory_iterator(dest, ignored)) fs::remove_all(e.path(), ignored);
    }
  };
  auto git = [&](std::vector<std::string> args) {
    args.insert(args.begin(), {"git", "-C", dest.string()});
    return RunProcess(args);
  };

  try {
    ProcessResult r = RunProcess({"git", "init", "-q", dest.string()});
    if (r.exit_code != 0) throw FetchError("git init failed: " + Trimmed(r.output));
    r = git({"remote", "add", "origin", ref.locator});
    if (r.exit_code != 0) throw FetchError("git remote add failed: " + Trimmed(r.output));

    const std::string wanted = ref.revision.value_or("HEAD");
    std::string checkout = "FETCH_HEAD";
    r = git({"fetch", "-q", "--depth", "1", "origin", wanted});
    if (r.exit_code != 0) {
      if (LooksLikeNetworkFailure(r.output)) throw FetchError("fetch failed: " + Trimmed(r.output));
      // Servers may refuse shallow fetches of unadvertised commits; fall back
      // to a full fetch and resolve locally.
      r = git({"fetch", "-q", "--tags", "origin", "+refs/heads/*:refs/remotes/origin/*"});
      if (r.exit_code != 0) {
        if (LooksLikeNetworkFailure(r.output)) throw FetchError("fetch failed: " + Trimmed(r.output));
        throw RevisionError("cannot fetch revision " + wanted + ": " + Trimmed(r.output));
      }
      r = git({"rev-parse", "--verify", "-q", wanted + "^{commit}"});
      if (r.exit_code != 0) throw RevisionError("revision not found: " + wanted);
      checkout = Trimmed(r.output);
    }
    r = git({"-c", "advice.detachedHead=false", "checkout", "-q", checkout});
    if (r.exit_code != 0) throw RevisionError("checkout of " + wanted + " failed: " + Trimmed(r.output));
    r = git({"rev-parse", "HEAD"});
    if (r.exit_code != 0) throw RevisionError("cannot resolve HEAD: " + Trimmed(r.output));
    const std::string resolved = Trimmed(r.output);
    if (ref.revision && std::regex_match(*ref.revision, std::regex("[0-9a-fA-F]{7,40}")) &&
        !resolved.starts_with(*ref.revision)) {
      throw RevisionError("revision " + *ref.revision + " resolved to " + resolved);
    }

    RepoRef pinned = ref;
    pinned.revision = resolved;
    fs::path root = dest;
    if (ref.subdir) {
      root = dest / *ref.subdir;
      if (!fs::is_directory(root, ec)) throw RevisionError("subdirectory not present at revision: " + *ref.subdir);
    }
    FetchResult out{root, EnumerateSources(root, filters, pinned, timestamp)};
    return out;
  } catch (...) {
    cleanup();
    throw;
  }
}

}  // namespace agentaudit
