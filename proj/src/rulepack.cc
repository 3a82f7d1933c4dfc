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

#include "agentaudit/rulepack.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "agentaudit/errors.h"

namespace agentaudit {

using nlohmann::json;

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Lowercase with every whitespace run collapsed to one space.
std::string FoldText(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out.push_back(' ');
    space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

bool HasKind(const std::vector<FlagKind>& kinds, const FlagKind& kind) {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

}  // namespace

bool ValueMatcher::Matches(const NormalizedValue& value) const {
  switch (op) {
    case Op::kEq:
      return value == operand;
    case Op::kIeq: {
      const auto* s = value.As<StrVal>();
      return s != nullptr && Lower(s->value) == Lower(text);
    }
    case Op::kLe: {
      const auto* i = value.As<IntVal>();
      return i != nullptr && i->value <= number;
    }
    case Op::kGt: {
      const auto* i = value.As<IntVal>();
      return i != nullptr && i->value > number;
    }
    case Op::kType:
      if (text == "bool") return value.Is<BoolVal>();
      if (text == "int") return value.Is<IntVal>();
      if (text == "str") return value.Is<StrVal>();
      if (text == "mapping") return value.Is<MappingVal>();
      if (text == "absent") return value.Is<AbsentVal>();
      if (text == "unresolved") return value.Is<UnresolvedVal>();
      if (text == "resolved") return !value.Is<UnresolvedVal>();
      return false;
    case Op::kContains: {
      std::string_view haystack;
      if (const auto* s = value.As<StrVal>()) haystack = s->value;
      else if (const auto* u = value.As<UnresolvedVal>()) haystack = u->raw;
      else return false;
      return FoldText(haystack).find(FoldText(text)) != std::string::npos;
    }
    case Op::kNot:
      return !children.at(0).Matches(value);
    case Op::kAnyOf:
      return std::any_of(children.begin(), children.end(),
                         [&](const ValueMatcher& m) { return m.Matches(value); });
    case Op::kAllOf:
      return std::all_of(children.begin(), children.end(),
                         [&](const ValueMatcher& m) { return m.Matches(value); });
  }
  return false;
}

bool SiteFilter::Matches(const FlagSite& site) const {
  if (!HasKind(kinds, site.kind)) return false;
  if (provenance && site.provenance != *provenance) return false;
  return !value || value->Matches(site.value);
}

bool Predicate::Evaluate(std::span<const FlagSite> sites) const {
  switch (op) {
    case Op::kAny:
      return std::any_of(sites.begin(), sites.end(),
                         [&](const FlagSite& s) { return filter.Matches(s); });
    case Op::kNone:
      return std::none_of(sites.begin(), sites.end(),
                          [&](const FlagSite& s) { return filter.Matches(s); });
    case Op::kAll:
      return std::all_of(sites.begin(), sites.end(), [&](const FlagSite& s) {
        return !HasKind(filter.kinds, s.kind) || filter.Matches(s);
      });
    case Op::kUnbound:
      for (const FlagSite& c : sites) {
        if (!filter.Matches(c)) continue;
        const Location& anchor = c.call_site ? *c.call_site : c.location;
        const bool bound = std::any_of(sites.begin(), sites.end(), [&](const FlagSite& b) {
          return HasKind(bounds, b.kind) && b.call_site && b.call_site->SamePosition(anchor);
        });
        if (!bound) return true;
      }
      return false;
    case Op::kAnd:
      return std::all_of(children.begin(), children.end(),
                         [&](const Predicate& p) { return p.Evaluate(sites); });
    case Op::kOr:
      return std::any_of(children.begin(), children.end(),
                         [&](const Predicate& p) { return p.Evaluate(sites); });
    case Op::kNot:
      return !children.at(0).Evaluate(sites);
  }
  return false;
}

void Predicate::CollectKinds(std::vector<FlagKind>& out) const {
  out.insert(out.end(), filter.kinds.begin(), filter.kinds.end());
  out.insert(out.end(), bounds.begin(), bounds.end());
  for (const auto& c : children) c.CollectKinds(out);
}

std::vector<FlagKind> RulePack::EvidenceKinds(Attribute attribute) const {
  std::vector<FlagKind> out;
  auto it = level_rules.find(attribute);
  if (it != level_rules.end()) {
    for (const auto& rule : it->second) rule.when.CollectKinds(out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// JSON codec

namespace {

[[noreturn]] void Fail(const std::string& message) { throw RulePackError(message); }

const json& Require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) Fail(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string RequireString(const json& j, const std::string& where) {
  if (!j.is_string()) Fail(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> StringList(const json& j, const std::string& where) {
  if (!j.is_array()) Fail(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(RequireString(e, where));
  return out;
}

std::vector<FlagKind> KindList(const json& j, const std::string& where) {
  std::vector<FlagKind> out;
  if (j.is_string()) {
    out.emplace_back(j.get<std::string>());
    return out;
  }
  for (auto& s : StringList(j, where)) out.emplace_back(std::move(s));
  return out;
}

ValueMatcher MatcherFromJson(const json& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1) Fail(where + ": value test must be a one-key object");
  const auto& [key, arg] = *j.items().begin();
  ValueMatcher m;
  if (key == "eq") {
    m.op = ValueMatcher::Op::kEq;
    m.operand = ValueFromJson(arg);
  } else if (key == "ieq" || key == "contains" || key == "type") {
    m.op = key == "ieq" ? ValueMatcher::Op::kIeq
           : key == "contains" ? ValueMatcher::Op::kContains
                               : ValueMatcher::Op::kType;
    m.text = RequireString(arg, where + "." + key);
    if (m.op == ValueMatcher::Op::kType) {
      static const std::vector<std::string> kTypes = {"bool",   "int",        "str",     "mapping",
                                                      "absent", "unresolved", "resolved"};
      if (std::find(kTypes.begin(), kTypes.end(), m.text) == kTypes.end()) {
        Fail(where + ": unknown value type \"" + m.text + "\"");
      }
    }
  } else if (key == "le" || key == "gt") {
    if (!arg.is_number_integer()) Fail(where + "." + key + ": expected an integer");
    m.op = key == "le" ? ValueMatcher::Op::kLe : ValueMatcher::Op::kGt;
    m.number = arg.get<std::int64_t>();
  } else if (key == "not") {
    m.op = ValueMatcher::Op::kNot;
    m.children.push_back(MatcherFromJson(arg, where + ".not"));
  } else if (key == "any_of" || key == "all_of") {
    if (!arg.is_array() || arg.empty()) Fail(where + "." + key + ": expected a non-empty array");
    m.op = key == "any_of" ? ValueMatcher::Op::kAnyOf : ValueMatcher::Op::kAllOf;
    for (const auto& c : arg) m.children.push_back(MatcherFromJson(c, where + "." + key));
  } else {
    Fail(where + ": unknown value test \"" + key + "\"");
  }
  return m;
}

json MatcherToJson(const ValueMatcher& m) {
  switch (m.op) {
    case ValueMatcher::Op::kEq:
      return {{"eq", ValueToJson(m.operand)}};
    case ValueMatcher::Op::kIeq:
      return {{"ieq", m.text}};
    case ValueMatcher::Op::kContains:
      return {{"contains", m.text}};
    case ValueMatcher::Op::kType:
      return {{"type", m.text}};
    case ValueMatcher::Op::kLe:
      return {{"le", m.number}};
    case ValueMatcher::Op::kGt:
      return {{"gt", m.number}};
    case ValueMatcher::Op::kNot:
      return {{"not", MatcherToJson(m.children.at(0))}};
    case ValueMatcher::Op::kAnyOf:
    case ValueMatcher::Op::kAllOf: {
      json list = json::array();
      for (const auto& c : m.children) list.push_back(MatcherToJson(c));
      return {{m.op == ValueMatcher::Op::kAnyOf ? "any_of" : "all_of", list}};
    }
  }
  return nullptr;
}

SiteFilter FilterFromJson(const json& j, const std::string& where) {
  if (!j.is_object()) Fail(where + ": expected an object");
  SiteFilter f;
  if (j.contains("kinds")) f.kinds = KindList(j["kinds"], where + ".kinds");
  else if (j.contains("kind")) f.kinds = KindList(j["kind"], where + ".kind");
  else Fail(where + ": missing \"kinds\"");
  if (f.kinds.empty()) Fail(where + ": \"kinds\" is empty");
  if (j.contains("value")) f.value = MatcherFromJson(j["value"], where + ".value");
  if (j.contains("provenance")) {
    const std::string p = RequireString(j["provenance"], where + ".provenance");
    if (p == "explicit") f.provenance = Provenance::kExplicit;
    else if (p == "framework_default") f.provenance = Provenance::kFrameworkDefault;
    else Fail(where + ": unknown provenance \"" + p + "\"");
  }
  for (const auto& [key, unused] : j.items()) {
    if (key != "kinds" && key != "kind" && key != "value" && key != "provenance") {
      Fail(where + ": unknown key \"" + key + "\"");
    }
  }
  return f;
}

json FilterToJson(const SiteFilter& f) {
  json kinds = json::array();
  for (const auto& k : f.kinds) kinds.push_back(k.name());
  json out = {{"kinds", kinds}};
  if (f.value) out["value"] = MatcherToJson(*f.value);
  if (f.provenance) out["provenance"] = std::string(ProvenanceName(*f.provenance));
  return out;
}

Predicate PredicateFromJson(const json& j, const std::string& where) {
  if (!j.is_object() || j.size() != 1) Fail(where + ": predicate must be a one-key object");
  const auto& [key, arg] = *j.items().begin();
  Predicate p;
  if (key == "any" || key == "all" || key == "none") {
    p.op = key == "any" ? Predicate::Op::kAny : key == "all" ? Predicate::Op::kAll : Predicate::Op::kNone;
    p.filter = FilterFromJson(arg, where + "." + key);
  } else if (key == "unbound") {
    p.op = Predicate::Op::kUnbound;
    p.filter.kinds = KindList(Require(arg, "kinds", where + ".unbound"), where + ".unbound.kinds");
    p.bounds = KindList(Require(arg, "bounds", where + ".unbound"), where + ".unbound.bounds");
    if (p.filter.kinds.empty() || p.bounds.empty()) Fail(where + ".unbound: empty kind list");
  } else if (key == "and" || key == "or") {
    if (!arg.is_array() || arg.empty()) Fail(where + "." + key + ": expected a non-empty array");
    p.op = key == "and" ? Predicate::Op::kAnd : Predicate::Op::kOr;
    for (const auto& c : arg) p.children.push_back(PredicateFromJson(c, where + "." + key));
  } else if (key == "not") {
    p.op = Predicate::Op::kNot;
    p.children.push_back(PredicateFromJson(arg, where + ".not"));
  } else {
    Fail(where + ": unknown predicate \"" + key + "\"");
  }
  return p;
}

json PredicateToJson(const Predicate& p) {
  switch (p.op) {
    case Predicate::Op::kAny:
      return {{"any", FilterToJson(p.filter)}};
    case Predicate::Op::kAll:
      return {{"all", FilterToJson(p.filter)}};
    case Predicate::Op::kNone:
      return {{"none", FilterToJson(p.filter)}};
    case Predicate::Op::kUnbound: {
      json kinds = json::array();
      json bounds = json::array();
      for (const auto& k : p.filter.kinds) kinds.push_back(k.name());
      for (const auto& k : p.bounds) bounds.push_back(k.name());
      return {{"unbound", {{"kinds", kinds}, {"bounds", bounds}}}};
    }
    case Predicate::Op::kAnd:
    case Predicate::Op::kOr: {
      json list = json::array();
      for (const auto& c : p.children) list.push_back(PredicateToJson(c));
      return {{p.op == Predicate::Op::kAnd ? "and" : "or", list}};
    }
    case Predicate::Op::kNot:
      return {{"not", PredicateToJson(p.children.at(0))}};
  }
  return nullptr;
}

}  // namespace

std::vector<std::string> ValidateRulePack(const RulePack& pack) {
  std::vector<std::string> problems;
  if (pack.framework.empty()) problems.push_back("framework is empty");
  if (pack.version.empty()) problems.push_back("version is empty");
  if (pack.host_language.empty()) problems.push_back("host_language is empty");
  if (pack.extensions.empty()) problems.push_back("no host-language extensions declared");
  for (const auto& ext : pack.extensions) {
    if (ext.size() < 2 || ext[0] != '.') problems.push_back("extension \"" + ext + "\" must start with '.'");
  }
  const auto declared = [&](const FlagKind& k) { return pack.flag_patterns.count(k) > 0; };
  for (const auto& [kind, patterns] : pack.flag_patterns) {
    if (patterns.keywords.empty() && patterns.calls.empty()) {
      problems.push_back("flag " + kind.name() + " has no patterns");
    }
    for (const auto* list : {&patterns.keywords, &patterns.calls}) {
      for (const auto& re : *list) {
        try {
          std::regex compiled(re, std::regex::ECMAScript);
        } catch (const std::regex_error& e) {
          problems.push_back("flag " + kind.name() + ": bad pattern \"" + re + "\": " + e.what());
        }
      }
    }
  }
  for (const auto& [ctor, defaults] : pack.constructor_defaults) {
    for (const auto& [kind, value] : defaults) {
      if (!declared(kind)) problems.push_back("default for " + ctor + " uses undeclared flag " + kind.name());
    }
  }
  for (const auto& d : pack.implied_defaults) {
    if (!declared(d.trigger)) problems.push_back("implied default trigger " + d.trigger.name() + " is undeclared");
    if (!declared(d.inject)) problems.push_back("implied default target " + d.inject.name() + " is undeclared");
  }
  for (Attribute a : kAllAttributes) {
    auto it = pack.level_rules.find(a);
    if (it == pack.level_rules.end()) {
      problems.push_back("no rules for attribute " + std::string(AttributeName(a)));
      continue;
    }
    for (Level l : kAllLevels) {
      const bool covered = std::any_of(it->second.begin(), it->second.end(),
                                       [&](const LevelRule& r) { return r.level == l; });
      if (!covered) {
        problems.push_back("attribute " + std::string(AttributeName(a)) + " has no rule for level " +
                           std::string(LevelName(l)));
      }
    }
    for (const FlagKind& k : pack.EvidenceKinds(a)) {
      if (!declared(k)) {
        problems.push_back("attribute " + std::string(AttributeName(a)) + " references undeclared flag " + k.name());
      }
    }
  }
  return problems;
}

json RulePackToJson(const RulePack& pack) {
  json out;
  out["schema"] = "agentaudit-rulepack/1";
  out["framework"] = pack.framework;
  out["version"] = pack.version;
  out["host_language"] = pack.host_language;
  out["extensions"] = pack.extensions;
  json flags = json::object();
  for (const auto& [kind, patterns] : pack.flag_patterns) {
    json entry = json::object();
    entry["keywords"] = patterns.keywords;
    entry["calls"] = patterns.calls;
    flags[kind.name()] = entry;
  }
  out["flags"] = flags;
  json defaults = json::object();
  for (const auto& [ctor, values] : pack.constructor_defaults) {
    json entry = json::object();
    for (const auto& [kind, value] : values) entry[kind.name()] = ValueToJson(value);
    defaults[ctor] = entry;
  }
  out["constructor_defaults"] = defaults;
  json implied = json::array();
  for (const auto& d : pack.implied_defaults) {
    implied.push_back({{"trigger", d.trigger.name()},
                       {"unless_keys", d.unless_keys},
                       {"inject", d.inject.name()},
                       {"value", ValueToJson(d.value)}});
  }
  out["implied_defaults"] = implied;
  json rules = json::object();
  for (const auto& [attribute, list] : pack.level_rules) {
    json arr = json::array();
    for (const auto& r : list) {
      json rule = {{"level", std::string(LevelName(r.level))}, {"when", PredicateToJson(r.when)}};
      if (!r.note.empty()) rule["note"] = r.note;
      if (r.mark_mixed) rule["mark_mixed"] = true;
      if (r.from_absence) rule["from_absence"] = true;
      arr.push_back(rule);
    }
    rules[std::string(AttributeName(attribute))] = arr;
  }
  out["rules"] = rules;
  return out;
}

RulePack RulePackFromJson(const json& j) {
  if (!j.is_object()) Fail("rule pack: expected an object");
  if (j.contains("schema") && j["schema"] != "agentaudit-rulepack/1") {
    Fail("rule pack: unsupported schema " + j["schema"].dump());
  }
  RulePack pack;
  pack.framework = RequireString(Require(j, "framework", "rule pack"), "framework");
  pack.version = RequireString(Require(j, "version", "rule pack"), "version");
  pack.host_language = RequireString(Require(j, "host_language", "rule pack"), "host_language");
  pack.extensions = StringList(Require(j, "extensions", "rule pack"), "extensions");

  const json& flags = Require(j, "flags", "rule pack");
  if (!flags.is_object()) Fail("flags: expected an object");
  for (const auto& [name, entry] : flags.items()) {
    KindPatterns patterns;
    const std::string where = "flags." + name;
    if (!entry.is_object()) Fail(where + ": expected an object");
    if (entry.contains("keywords")) patterns.keywords = StringList(entry["keywords"], where + ".keywords");
    if (entry.contains("calls")) patterns.calls = StringList(entry["calls"], where + ".calls");
    pack.flag_patterns[FlagKind(name)] = std::move(patterns);
  }

  if (j.contains("constructor_defaults")) {
    const json& defaults = j["constructor_defaults"];
    if (!defaults.is_object()) Fail("constructor_defaults: expected an object");
    for (const auto& [ctor, values] : defaults.items()) {
      if (!values.is_object()) Fail("constructor_defaults." + ctor + ": expected an object");
      for (const auto& [kind, value] : values.items()) {
        pack.constructor_defaults[ctor][FlagKind(kind)] = ValueFromJson(value);
      }
    }
  }
  if (j.contains("implied_defaults")) {
    const json& implied = j["implied_defaults"];
    if (!implied.is_array()) Fail("implied_defaults: expected an array");
    for (const auto& d : implied) {
      ImpliedDefault entry;
      entry.trigger = FlagKind(RequireString(Require(d, "trigger", "implied_defaults"), "trigger"));
      entry.unless_keys = StringList(Require(d, "unless_keys", "implied_defaults"), "unless_keys");
      entry.inject = FlagKind(RequireString(Require(d, "inject", "implied_defaults"), "inject"));
      entry.value = ValueFromJson(Require(d, "value", "implied_defaults"));
      pack.implied_defaults.push_back(std::move(entry));
    }
  }

  const json& rules = Require(j, "rules", "rule pack");
  if (!rules.is_object()) Fail("rules: expected an object");
  for (const auto& [name, list] : rules.items()) {
    const auto attribute = ParseAttribute(name);
    if (!attribute) Fail("rules: unknown attribute \"" + name + "\"");
    if (!list.is_array()) Fail("rules." + name + ": expected an array");
    auto& out = pack.level_rules[*attribute];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "rules." + name + "[" + std::to_string(i) + "]";
      const json& r = list[i];
      LevelRule rule;
      const auto level = ParseLevel(RequireString(Require(r, "level", where), where + ".level"));
      if (!level) Fail(where + ": unknown level");
      rule.level = *level;
      rule.when = PredicateFromJson(Require(r, "when", where), where + ".when");
      if (r.contains("note")) rule.note = RequireString(r["note"], where + ".note");
      if (r.contains("mark_mixed")) rule.mark_mixed = r["mark_mixed"].get<bool>();
      if (r.contains("from_absence")) rule.from_absence = r["from_absence"].get<bool>();
      out.push_back(std::move(rule));
    }
  }

  const auto problems = ValidateRulePack(pack);
  if (!problems.empty()) {
    std::string message = "invalid rule pack:";
    for (const auto& p : problems) message += "\n  - " + p;
    Fail(message);
  }
  return pack;
}

RulePack LoadRulePack(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw RulePackError("cannot read rule pack " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw RulePackError(path.string() + ": " + e.what());
  }
  return RulePackFromJson(j);
}

std::string SerializeRulePack(const RulePack& pack) { return RulePackToJson(pack).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Built-in AutoGen pack

namespace {

constexpr const char* kAutoGenPack = R"json(
{
  "schema": "agentaudit-rulepack/1",
  "framework": "autogen",
  "version": "1.0.0",
  "host_language": "python",
  "extensions": [".py"],
  "flags": {
    "CodeExecutionConfig": {"keywords": ["code_execution_config"]},
    "UseDocker": {
      "keywords": ["use_docker"],
      "calls": ["(?:.*\\.)?(?:LocalCommandLineCodeExecutor|DockerCommandLineCodeExecutor)"]
    },
    "BrowserConfig": {"keywords": ["browser_config"]},
    "MaxRounds": {"keywords": ["max_round", "max_rounds", "max_turns"]},
    "MaxConsecutiveAutoReply": {"keywords": ["max_consecutive_auto_reply"]},
    "HumanInputMode": {"keywords": ["human_input_mode"]},
    "SystemMessage": {"keywords": ["system_message"]},
    "LoggingInvocation": {"calls": [
      "(?:.*\\.)?runtime_logging\\.\\w+",
      "(?:.*\\.)?(?:logging|logger|_logger|LOGGER|log|_log)\\.\\w+",
      "(?:.*\\.)?(?:getLogger|get_logger|log|log_\\w+|\\w+_log|start_logging|stop_logging)",
      "(?:.*\\.)?(?:trace|trace_\\w+|\\w+_trace|\\w+_tracing|start_span)",
      "(?:.*\\.)?[Cc]ache\\.\\w+"
    ]},
    "DisplayConfig": {
      "keywords": ["display_\\w+", "reply_func"],
      "calls": ["(?:.*\\.)?display_\\w+"]
    },
    "AgentConstruction": {"calls": [
      "(?:.*\\.)?(?:AssistantAgent|UserProxyAgent|ConversableAgent|GPTAssistantAgent|RetrieveAssistantAgent|RetrieveUserProxyAgent|QdrantRetrieveUserProxyAgent|MathUserProxyAgent|SocietyOfMindAgent|MultimodalConversableAgent|LLaVAAgent|CompressibleAgent|TextAnalyzerAgent|WebSurferAgent|MultimodalWebSurfer|CodeExecutorAgent|CaptainAgent|ReasoningAgent|SwarmAgent)"
    ]},
    "GroupChatConstruction": {"calls": [
      "(?:.*\\.)?(?:GroupChat|RoundRobinGroupChat|SelectorGroupChat|Swarm|MagenticOneGroupChat)"
    ]}
  },
  "constructor_defaults": {
    "UserProxyAgent": {"HumanInputMode": "ALWAYS"},
    "AssistantAgent": {"HumanInputMode": "NEVER"},
    "ConversableAgent": {"HumanInputMode": "TERMINATE"}
  },
  "implied_defaults": [
    {"trigger": "CodeExecutionConfig", "unless_keys": ["use_docker", "executor"], "inject": "UseDocker", "value": true}
  ],
  "rules": {
    "actions": [
      {"level": "higher",
       "when": {"any": {"kinds": ["CodeExecutionConfig"], "value": {"not": {"eq": false}}}}},
      {"level": "middle",
       "when": {"and": [
         {"all": {"kinds": ["CodeExecutionConfig"], "value": {"eq": false}}},
         {"any": {"kinds": ["SystemMessage"], "value": {"contains": "execute the function"}}}]}},
      {"level": "lower",
       "when": {"and": [
         {"all": {"kinds": ["CodeExecutionConfig"], "value": {"eq": false}}},
         {"none": {"kinds": ["SystemMessage"], "value": {"contains": "execute the function"}}},
         {"any": {"kinds": ["CodeExecutionConfig", "SystemMessage"]}}]}}
    ],
    "environment": [
      {"level": "higher",
       "when": {"any": {"kinds": ["UseDocker"], "value": {"any_of": [{"eq": false}, {"contains": "LocalCommandLineCodeExecutor"}]}}}},
      {"level": "middle",
       "when": {"and": [
         {"any": {"kinds": ["UseDocker"], "value": {"all_of": [{"type": "resolved"}, {"not": {"type": "absent"}}, {"not": {"eq": false}}, {"not": {"contains": "LocalCommandLineCodeExecutor"}}]}}},
         {"any": {"kinds": ["BrowserConfig"], "value": {"not": {"eq": false}}}}]}},
      {"level": "lower",
       "when": {"and": [
         {"any": {"kinds": ["UseDocker"], "value": {"all_of": [{"type": "resolved"}, {"not": {"type": "absent"}}, {"not": {"eq": false}}, {"not": {"contains": "LocalCommandLineCodeExecutor"}}]}}},
         {"none": {"kinds": ["BrowserConfig"], "value": {"not": {"eq": false}}}}]}}
    ],
    "orchestration": [
      {"level": "higher",
       "when": {"unbound": {"kinds": ["AgentConstruction", "GroupChatConstruction"],
                            "bounds": ["MaxRounds", "MaxConsecutiveAutoReply"]}}},
      {"level": "middle",
       "when": {"any": {"kinds": ["MaxRounds", "MaxConsecutiveAutoReply"], "value": {"gt": 1}}}},
      {"level": "middle",
       "when": {"any": {"kinds": ["MaxRounds", "MaxConsecutiveAutoReply"], "value": {"not": {"type": "int"}}}},
       "mark_mixed": true,
       "note": "an interaction bound is not a static integer; scored as bounded"},
      {"level": "lower",
       "when": {"and": [
         {"any": {"kinds": ["MaxRounds", "MaxConsecutiveAutoReply"]}},
         {"all": {"kinds": ["MaxRounds", "MaxConsecutiveAutoReply"], "value": {"le": 1}}}]}}
    ],
    "human_in_the_loop": [
      {"level": "middle",
       "when": {"any": {"kinds": ["HumanInputMode"], "value": {"ieq": "TERMINATE"}}}},
      {"level": "middle",
       "when": {"and": [
         {"any": {"kinds": ["HumanInputMode"], "value": {"ieq": "ALWAYS"}}},
         {"any": {"kinds": ["HumanInputMode"], "value": {"ieq": "NEVER"}}}]},
       "mark_mixed": true,
       "note": "agents mix human_input_mode values"},
      {"level": "lower",
       "when": {"and": [
         {"any": {"kinds": ["HumanInputMode"], "value": {"ieq": "ALWAYS"}}},
         {"none": {"kinds": ["HumanInputMode"], "value": {"any_of": [{"ieq": "NEVER"}, {"ieq": "TERMINATE"}]}}}]}},
      {"level": "higher",
       "when": {"and": [
         {"any": {"kinds": ["HumanInputMode"], "value": {"ieq": "NEVER"}}},
         {"none": {"kinds": ["HumanInputMode"], "value": {"any_of": [{"ieq": "ALWAYS"}, {"ieq": "TERMINATE"}]}}}]}}
    ],
    "observability": [
      {"level": "middle",
       "when": {"any": {"kinds": ["LoggingInvocation"]}}},
      {"level": "lower",
       "when": {"any": {"kinds": ["DisplayConfig"], "value": {"not": {"eq": false}}}}},
      {"level": "higher",
       "when": {"and": [
         {"none": {"kinds": ["DisplayConfig"], "value": {"not": {"eq": false}}}},
         {"none": {"kinds": ["LoggingInvocation"]}},
         {"any": {"kinds": ["AgentConstruction", "GroupChatConstruction"]}}]},
       "from_absence": true,
       "note": "agents are constructed but no logging, tracing or display configuration was found"}
    ]
  }
}
)json";

}  // namespace

const RulePack& AutoGenRulePack() {
  static const RulePack pack = RulePackFromJson(json::parse(kAutoGenPack));
  return pack;
}

}  // namespace agentaudit
