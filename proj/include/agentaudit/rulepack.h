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

#ifndef AGENTAUDIT_RULEPACK_H_
#define AGENTAUDIT_RULEPACK_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agentaudit/flag_site.h"
#include "agentaudit/taxonomy.h"
#include "agentaudit/value.h"
#include "json.hpp"

namespace agentaudit {

// Test applied to a single normalized value.
//
//   {"eq": <literal>}          exact equality
//   {"ieq": "text"}            case-insensitive string equality
//   {"le": n} / {"gt": n}      integer comparison (non-integers never match)
//   {"type": "bool"|"int"|"str"|"mapping"|"absent"|"unresolved"|"resolved"}
//   {"contains": "phrase"}     case-insensitive, whitespace-normalized
//                              substring of a string value or of the raw
//                              text of an unresolved expression
//   {"not": m} / {"any_of": [m...]} / {"all_of": [m...]}
struct ValueMatcher {
  enum class Op { kEq, kIeq, kLe, kGt, kType, kContains, kNot, kAnyOf, kAllOf };

  Op op = Op::kEq;
  NormalizedValue operand;
  std::int64_t number = 0;
  std::string text;
  std::vector<ValueMatcher> children;

  bool Matches(const NormalizedValue& value) const;
};

struct SiteFilter {
  std::vector<FlagKind> kinds;
  std::optional<ValueMatcher> value;
  std::optional<Provenance> provenance;

  bool Matches(const FlagSite& site) const;
};

// Predicate over a repository's site list.
//
//   {"any": filter}    some site passes the filter
//   {"all": filter}    every site of the filter's kinds passes its value test
//                      (vacuously true)
//   {"none": filter}   no site passes the filter
//   {"unbound": {"kinds": [...], "bounds": [...]}}
//                      some site of `kinds` has no site of `bounds` attached
//                      to the same call
//   {"and": [...]} / {"or": [...]} / {"not": p}
struct Predicate {
  enum class Op { kAny, kAll, kNone, kUnbound, kAnd, kOr, kNot };

  Op op = Op::kAny;
  SiteFilter filter;
  std::vector<FlagKind> bounds;
  std::vector<Predicate> children;

  bool Evaluate(std::span<const FlagSite> sites) const;
  // Every kind this predicate inspects.
  void CollectKinds(std::vector<FlagKind>& out) const;
};

struct LevelRule {
  Level level = Level::kLower;
  Predicate when;
  // Added to the attribute's notes when this rule decides the level.
  std::string note;
  // The rule's level always counts as mixed evidence.
  bool mark_mixed = false;
  // The rule infers its level from missing flags; such levels are not
  // counted when deciding whether evidence conflicts.
  bool from_absence = false;
};

// A framework default implied by another flag's value, e.g. code execution
// runs in Docker unless the config says otherwise. Fires for every explicit
// `trigger` site whose value is not False and is either unresolved or a
// mapping holding none of `unless_keys`.
struct ImpliedDefault {
  FlagKind trigger;
  std::vector<std::string> unless_keys;
  FlagKind inject;
  NormalizedValue value;
};

struct KindPatterns {
  // Full-match regexes over keyword-argument names, assignment targets and
  // string keys of dict literals.
  std::vector<std::string> keywords;
  // Full-match regexes over the dotted callee of a call expression, after
  // import-alias resolution.
  std::vector<std::string> calls;
};

struct RulePack {
  std::string framework;
  std::string version;
  std::string host_language;
  std::vector<std::string> extensions;  // host-language file extensions, e.g. ".py"
  std::map<FlagKind, KindPatterns> flag_patterns;
  std::map<std::string, std::map<FlagKind, NormalizedValue>> constructor_defaults;
  std::vector<ImpliedDefault> implied_defaults;
  // Evaluated in order; the first rule that holds decides the level.
  std::map<Attribute, std::vector<LevelRule>> level_rules;

  std::string Id() const { return framework + "@" + version; }
  // Kinds referenced by the attribute's rules, sorted and unique.
  std::vector<FlagKind> EvidenceKinds(Attribute attribute) const;
};

// The built-in pack for AutoGen applications.
const RulePack& AutoGenRulePack();

// Structural problems: missing attribute, a level with no rule, unknown
// kinds, regexes that fail to compile. Empty means valid.
std::vector<std::string> ValidateRulePack(const RulePack& pack);

nlohmann::json RulePackToJson(const RulePack& pack);
// Throws RulePackError on malformed input or a pack that fails validation.
RulePack RulePackFromJson(const nlohmann::json& json);
RulePack LoadRulePack(const std::filesystem::path& path);
std::string SerializeRulePack(const RulePack& pack);

}  // namespace agentaudit

#endif  // AGENTAUDIT_RULEPACK_H_
