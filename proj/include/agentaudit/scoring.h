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


#ifndef AGENTAUDIT_SCORING_H_
#define AGENTAUDIT_SCORING_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "agentaudit/flag_site.h"
#include "agentaudit/ingest.h"
#include "agentaudit/rulepack.h"
#include "agentaudit/scanner.h"
#include "agentaudit/taxonomy.h"

namespace agentaudit {

struct AttributeScore {
  Attribute attribute = Attribute::kActions;
  Rating level;
  std::vector<FlagSite> evidence;  // sorted with SiteLess
  // Sites anchored at different calls would, taken alone, score at two or
  // more distinct levels (or the deciding rule declares itself mixed).
  bool mixed = false;
  std::vector<std::string> notes;
};

struct ScanStats {
  std::size_t files_scanned = 0;  // host-language files
  std::size_t files_with_warnings = 0;
  std::size_t warning_count = 0;

  double ParseFailureFraction() const {
    return files_scanned == 0 ? 0.0 : static_cast<double>(files_with_warnings) / files_scanned;
  }
};

struct RepoScorecard {
  RepoRef repo;
  std::string manifest_hash;
  std::map<Attribute, AttributeScore> scores;
  std::string rulepack_id;
  ScanStats stats;
  std::vector<std::string> warnings;
  std::vector<ScanWarning> scan_warnings;
  std::optional<std::string> generated_at;
};

// Appends framework-default sites for absent flags and returns the list
// sorted with SiteLess. Explicit sites are never altered.
std::vector<FlagSite> InjectDefaults(std::span<const FlagSite> sites, const RulePack& pack);

// Scores one attribute with the pack's ordered rules. `sites` must already be
// default-injected.
AttributeScore ScoreAttribute(Attribute attribute, std::span<const FlagSite> sites,
                              const RulePack& pack);

inline AttributeScore ScoreActions(std::span<const FlagSite> s, const RulePack& p) {
  return ScoreAttribute(Attribute::kActions, s, p);
}
inline AttributeScore ScoreEnvironment(std::span<const FlagSite> s, const RulePack& p) {
  return ScoreAttribute(Attribute::kEnvironment, s, p);
}
inline AttributeScore ScoreOrchestration(std::span<const FlagSite> s, const RulePack& p) {
  return ScoreAttribute(Attribute::kOrchestration, s, p);
}
inline AttributeScore ScoreHumanInLoop(std::span<const FlagSite> s, const RulePack& p) {
  return ScoreAttribute(Attribute::kHumanInTheLoop, s, p);
}
inline AttributeScore ScoreObservability(std::span<const FlagSite> s, const RulePack& p) {
  return ScoreAttribute(Attribute::kObservability, s, p);
}

// `sites` must already be default-injected.
RepoScorecard AggregateScorecard(const ScanManifest& manifest, std::span<const FlagSite> sites,
                                 const RulePack& pack);

}  // namespace agentaudit

#endif  // AGENTAUDIT_SCORING_H_
