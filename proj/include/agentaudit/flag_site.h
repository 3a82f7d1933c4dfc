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

#ifndef AGENTAUDIT_FLAG_SITE_H_
#define AGENTAUDIT_FLAG_SITE_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "agentaudit/value.h"

namespace agentaudit {

// Name of a category of code flag. The AutoGen pack declares the eleven
// built-in kinds below; other packs may declare their own.
class FlagKind {
 public:
  FlagKind() = default;
  explicit FlagKind(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  auto operator<=>(const FlagKind&) const = default;

 private:
  std::string name_;
};

namespace kinds {
inline const FlagKind kCodeExecutionConfig{"CodeExecutionConfig"};
inline const FlagKind kUseDocker{"UseDocker"};
inline const FlagKind kBrowserConfig{"BrowserConfig"};
inline const FlagKind kMaxRounds{"MaxRounds"};
inline const FlagKind kMaxConsecutiveAutoReply{"MaxConsecutiveAutoReply"};
inline const FlagKind kHumanInputMode{"HumanInputMode"};
inline const FlagKind kSystemMessage{"SystemMessage"};
inline const FlagKind kLoggingInvocation{"LoggingInvocation"};
inline const FlagKind kDisplayConfig{"DisplayConfig"};
inline const FlagKind kAgentConstruction{"AgentConstruction"};
inline const FlagKind kGroupChatConstruction{"GroupChatConstruction"};
}  // namespace kinds

struct Location {
  std::string path;
  int line = 0;    // 1-based
  int column = 0;  // 1-based, code points
  std::size_t offset = 0;  // byte offset into the file; not serialized

  bool SamePosition(const Location& o) const {
    return line == o.line && column == o.column && path == o.path;
  }
  auto Key() const { return std::tie(path, line, column); }
};

enum class Provenance { kExplicit, kFrameworkDefault };

std::string_view ProvenanceName(Provenance p);

struct FlagSite {
  FlagKind kind;
  NormalizedValue value;
  Location location;
  std::optional<std::string> enclosing_construct;
  std::optional<std::string> constructor_name;
  // Callee position of the call this site belongs to: the site itself for
  // construction and invocation sites, the enclosing call for keyword
  // arguments and for dict entries nested in call arguments. Unset for
  // module-level assignments and free-standing dicts.
  std::optional<Location> call_site;
  Provenance provenance = Provenance::kExplicit;

  bool operator==(const FlagSite& o) const {
    return kind == o.kind && value == o.value && location.Key() == o.location.Key() &&
           enclosing_construct == o.enclosing_construct &&
           constructor_name == o.constructor_name && provenance == o.provenance &&
           call_site.has_value() == o.call_site.has_value() &&
           (!call_site || call_site->Key() == o.call_site->Key());
  }
};

// Orders by (path, line, column), explicit before default, then kind.
bool SiteLess(const FlagSite& a, const FlagSite& b);

}  // namespace agentaudit

#endif  // AGENTAUDIT_FLAG_SITE_H_
