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

#ifndef AGENTAUDIT_SCANNER_H_
#define AGENTAUDIT_SCANNER_H_

#include <map>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "agentaudit/flag_site.h"
#include "agentaudit/rulepack.h"
#include "agentaudit/value.h"

namespace agentaudit {

// Compiled form of a pack's flag_patterns. Immutable after construction and
// safe to share across threads.
class FlagMatcher {
 public:
  explicit FlagMatcher(const RulePack& pack);

  std::vector<FlagKind> KeywordKinds(std::string_view name) const;
  std::vector<FlagKind> CallKinds(std::string_view callee) const;

 private:
  struct Entry {
    FlagKind kind;
    std::vector<std::regex> keywords;
    std::vector<std::regex> calls;
  };
  std::vector<Entry> entries_;
};

struct ScanWarning {
  std::string path;
  int line = 0;
  int column = 0;
  std::string message;
};

struct FileScan {
  std::vector<FlagSite> sites;  // sorted by (line, column)
  std::vector<ScanWarning> warnings;
};

// Extracts every flag site from one host-language file. Pure: depends only
// on (source, path, matcher). Undecodable input yields no sites and one
// warning; broken regions are skipped with a warning each.
FileScan ScanFile(std::string_view source, std::string_view path, const FlagMatcher& matcher);

struct CallArguments {
  std::map<std::string, NormalizedValue> keywords;
  std::vector<std::string> warnings;
};

// `region` starts at a call's opening parenthesis. Keyword arguments are
// split at top-level commas; positional and splat arguments are ignored.
// Unbalanced brackets abandon the region with a warning.
CallArguments ExtractCallArguments(std::string_view region);

}  // namespace agentaudit

#endif  // AGENTAUDIT_SCANNER_H_
