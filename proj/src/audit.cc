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


#include "agentaudit/audit.h"

#include "agentaudit/parallel.h"
#include "agentaudit/scanner.h"

namespace agentaudit {

AuditResult AuditManifest(ScanManifest manifest, const RulePack& pack, bool serial) {
  const FlagMatcher matcher(pack);
  const std::vector<FileScan> scans = serial
                                          ? ScanFilesSerial(manifest.root, manifest.files, matcher)
                                          : ScanFiles(manifest.root, manifest.files, matcher);
  std::vector<FlagSite> explicit_sites;
  ScanStats stats;
  std::vector<ScanWarning> scan_warnings;
  for (std::size_t i = 0; i < scans.size(); ++i) {
    if (manifest.files[i].language != LanguageTag::kHost) continue;
    ++stats.files_scanned;
    if (!scans[i].warnings.empty()) ++stats.files_with_warnings;
    stats.warning_count += scans[i].warnings.size();
    explicit_sites.insert(explicit_sites.end(), scans[i].sites.begin(), scans[i].sites.end());
    scan_warnings.insert(scan_warnings.end(), scans[i].warnings.begin(), scans[i].warnings.end());
  }

  AuditResult result;
  result.sites = InjectDefaults(explicit_sites, pack);
  result.card = AggregateScorecard(manifest, result.sites, pack);
  result.card.stats = stats;
  result.card.scan_warnings = std::move(scan_warnings);
  result.manifest = std::move(manifest);
  return result;
}

AuditResult AuditTree(const std::filesystem::path& root, const RepoRef& repo, const RulePack& pack,
                      const FilterRules& filters, bool timestamp) {
  return AuditManifest(EnumerateSources(root, filters, repo, timestamp), pack);
}

}  // namespace agentaudit
