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


#include "agentaudit/scoring.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace agentaudit {
namespace {

using AnchorKey = std::tuple<std::string, int, int>;

AnchorKey AnchorOf(const FlagSite& site) {
  const Location& at = site.call_site ? *site.call_site : site.location;
  return {at.path, at.line, at.column};
}

bool HasSiteAt(std::span<const FlagSite> sites, const FlagKind& kind, const Location& anchor) {
  return std::any_of(sites.begin(), sites.end(), [&](const FlagSite& s) {
    return s.kind == kind && s.call_site && s.call_site->SamePosition(anchor);
  });
}

FlagSite DefaultSiteAt(const FlagSite& origin, const FlagKind& kind, const NormalizedValue& value) {
  FlagSite site;
  site.kind = kind;
  site.value = value;
  site.location = origin.location;
  site.enclosing_construct = origin.enclosing_construct;
  site.constructor_name = origin.constructor_name;
  site.call_site = origin.call_site ? origin.call_site : std::optional<Location>(origin.location);
  site.provenance = Provenance::kFrameworkDefault;
  return site;
}

bool NeedsImpliedDefault(const FlagSite& trigger, const ImpliedDefault& rule) {
  const NormalizedValue& v = trigger.value;
  if (v.IsFalse() || v.Is<AbsentVal>()) return false;
  if (const auto* mapping = v.As<MappingVal>()) {
    return std::none_of(rule.unless_keys.begin(), rule.unless_keys.end(),
                        [&](const std::string& key) { return mapping->Find(key) != nullptr; });
  }
  return true;
}

// Level chosen by the first matching rule, skipping absence-based rules when
// `skip_absence` is set.
const LevelRule* Decide(const std::vector<LevelRule>& rules, std::span<const FlagSite> sites,
                        bool skip_absence) {
  for (const LevelRule& rule : rules) {
    if (skip_absence && rule.from_absence) continue;
    if (rule.when.Evaluate(sites)) return &rule;
  }
  return nullptr;
}

std::string Where(const Location& at) {
  return at.path + ":" + std::to_string(at.line) + ":" + std::to_string(at.column);
}

}  // namespace

std::vector<FlagSite> InjectDefaults(std::span<const FlagSite> sites, const RulePack& pack) {
  std::vector<FlagSite> out(sites.begin(), sites.end());
  for (const FlagSite& site : sites) {
    if (site.provenance != Provenance::kExplicit) continue;
    if (site.kind == kinds::kAgentConstruction && site.constructor_name) {
      auto it = pack.constructor_defaults.find(*site.constructor_name);
      if (it == pack.constructor_defaults.end()) continue;
      for (const auto& [kind, value] : it->second) {
        if (HasSiteAt(out, kind, site.location)) continue;
        out.push_back(DefaultSiteAt(site, kind, value));
      }
    }
    for (const ImpliedDefault& rule : pack.implied_defaults) {
      if (site.kind != rule.trigger || !NeedsImpliedDefault(site, rule)) continue;
      const bool present = std::any_of(out.begin(), out.end(), [&](const FlagSite& s) {
        return s.kind == rule.inject && s.provenance == Provenance::kFrameworkDefault &&
               s.location.SamePosition(site.location);
      });
      if (!present) out.push_back(DefaultSiteAt(site, rule.inject, rule.value));
    }
  }
  std::stable_sort(out.begin(), out.end(), SiteLess);
  return out;
}

AttributeScore ScoreAttribute(Attribute attribute, std::span<const FlagSite> sites,
                              const RulePack& pack) {
  AttributeScore score;
  score.attribute = attribute;
  const auto rules_it = pack.level_rules.find(attribute);
  if (rules_it == pack.level_rules.end()) return score;
  const std::vector<LevelRule>& rules = rules_it->second;

  const std::vector<FlagKind> kinds = pack.EvidenceKinds(attribute);
  for (const FlagSite& s : sites) {
    if (std::binary_search(kinds.begin(), kinds.end(), s.kind)) score.evidence.push_back(s);
  }
  std::stable_sort(score.evidence.begin(), score.evidence.end(), SiteLess);

  const LevelRule* decided = Decide(rules, score.evidence, false);
  if (decided) {
    score.level = decided->level;
    score.mixed = decided->mark_mixed;
    if (!decided->note.empty()) score.notes.push_back(decided->note);
  }

  // Mixed evidence: groups of sites anchored at one call, each scored alone.
  std::map<AnchorKey, std::vector<FlagSite>> groups;
  for (const FlagSite& s : score.evidence) groups[AnchorOf(s)].push_back(s);
  std::set<Level> group_levels;
  for (const auto& [anchor, group] : groups) {
    if (const LevelRule* r = Decide(rules, group, true)) group_levels.insert(r->level);
  }
  if (score.level && group_levels.size() >= 2) score.mixed = true;

  for (const FlagSite& s : score.evidence) {
    if (const auto* raw = s.value.As<UnresolvedVal>()) {
      score.notes.push_back(s.kind.name() + " at " + Where(s.location) +
                            " is not a static literal: " + raw->raw);
    }
  }
  return score;
}

RepoScorecard AggregateScorecard(const ScanManifest& manifest, std::span<const FlagSite> sites,
                                 const RulePack& pack) {
  RepoScorecard card;
  card.repo = manifest.repo;
  card.manifest_hash = manifest.Hash();
  card.rulepack_id = pack.Id();
  card.generated_at = manifest.created_at;
  for (Attribute a : kAllAttributes) card.scores[a] = ScoreAttribute(a, sites, pack);

  if (manifest.files.empty()) card.warnings.push_back("no host-language source files were found");
  if (sites.empty()) {
    card.warnings.push_back("no taxonomy-relevant code flags were found; every attribute is unknown");
  }
  if (card.repo.IsRemote() && !card.repo.revision) {
    card.warnings.push_back("repository revision is floating; results are a non-reproducible snapshot");
  }
  for (const IngestWarning& w : manifest.warnings) {
    card.warnings.push_back((w.path.empty() ? "" : w.path + ": ") + w.message);
  }
  return card;
}

}  // namespace agentaudit
