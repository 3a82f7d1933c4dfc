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


#ifndef AGENTAUDIT_AUDIT_H_
#define AGENTAUDIT_AUDIT_H_

#include <filesystem>
#include <vector>

#include "agentaudit/flag_site.h"
#include "agentaudit/ingest.h"
#include "agentaudit/rulepack.h"
#include "agentaudit/scoring.h"

namespace agentaudit {

struct AuditResult {
  ScanManifest manifest;
  std::vector<FlagSite> sites;  // default-injected, in manifest order
  RepoScorecard card;
};

// Scans the files of an existing manifest and scores them.
AuditResult AuditManifest(ScanManifest manifest, const RulePack& pack, bool serial = false);

// Enumerates `root`, then scans and scores it.
AuditResult AuditTree(const std::filesystem::path& root, const RepoRef& repo, const RulePack& pack,
                      const FilterRules& filters, bool timestamp = true);

}  // namespace agentaudit

#endif  // AGENTAUDIT_AUDIT_H_
