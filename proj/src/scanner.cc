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

#include "agentaudit/scanner.h"

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_map>
#include <utility>

#include "agentaudit/tokenizer.h"

namespace agentaudit {

std::string_view ProvenanceName(Provenance p) {
  return p == Provenance::kExplicit ? "explicit" : "framework_default";
}

bool SiteLess(const FlagSite& a, const FlagSite& b) {
  if (a.location.Key() != b.location.Key()) return a.location.Key() < b.location.Key();
  if (a.provenance != b.provenance) return a.provenance == Provenance::kExplicit;
  return a.kind < b.kind;
}

FlagMatcher::FlagMatcher(const RulePack& pack) {
  const auto flags = std::regex::ECMAScript | std::regex::optimize;
  for (const auto& [kind, patterns] : pack.flag_patterns) {
    Entry entry{kind, {}, {}};
    for (const auto& p : patterns.keywords) entry.keywords.emplace_back(p, flags);
    for (const auto& p : patterns.calls) entry.calls.emplace_back(p, flags);
    entries_.push_back(std::move(entry));
  }
}

std::vector<FlagKind> FlagMatcher::KeywordKinds(std::string_view name) const {
  std::vector<FlagKind> out;
  for (const auto& e : entries_) {
    for (const auto& re : e.keywords) {
      if (std::regex_match(name.begin(), name.end(), re)) {
        out.push_back(e.kind);
        break;
      }
    }
  }
  return out;
}

std::vector<FlagKind> FlagMatcher::CallKinds(std::string_view callee) const {
  std::vector<FlagKind> out;
  for (const auto& e : entries_) {
    for (const auto& re : e.calls) {
      if (std::regex_match(callee.begin(), callee.end(), re)) {
        out.push_back(e.kind);
        break;
      }
    }
  }
  return out;
}

namespace {

using Range = std::pair<std::size_t, std::size_t>;

constexpr std::array<std::string_view, 27> kReservedBeforeParen = {
    "and",    "or",     "not",    "in",      "is",       "if",     "elif",
    "else",   "while",  "for",    "return",  "yield",    "await",  "assert",
    "del",    "with",   "as",     "from",    "import",   "raise",  "except",
    "lambda", "global", "nonlocal", "class", "def",      "async"};

bool IsReserved(std::string_view word) {
  return std::find(kReservedBeforeParen.begin(), kReservedBeforeParen.end(), word) !=
         kReservedBeforeParen.end();
}

// Splits tokens [begin, end) at top-level commas. Empty items are dropped.
std::vector<Range> SplitTopLevel(const TokenStream& ts, std::size_t begin, std::size_t end) {
  std::vector<Range> out;
  std::size_t item = begin;
  for (std::size_t i = begin; i < end; ++i) {
    const Token& t = ts.tokens[i];
    if (t.kind == TokenKind::kOpen && ts.match[i] != TokenStream::kNoMatch && ts.match[i] < end) {
      i = ts.match[i];
      continue;
    }
    if (t.kind == TokenKind::kNewline) continue;
    if (t.Is(TokenKind::kOp, ",")) {
      if (item < i) out.emplace_back(item, i);
      item = i + 1;
    }
  }
  if (item < end) out.emplace_back(item, end);
  // Strip stray logical newlines at the edges (only present in broken input).
  for (auto& [b, e] : out) {
    while (b < e && ts.tokens[b].kind == TokenKind::kNewline) ++b;
    while (e > b && ts.tokens[e - 1].kind == TokenKind::kNewline) --e;
  }
  std::erase_if(out, [](const Range& r) { return r.first >= r.second; });
  return out;
}

std::string_view Slice(std::string_view source, const TokenStream& ts, Range r) {
  const std::size_t b = ts.tokens[r.first].offset;
  return source.substr(b, ts.tokens[r.second - 1].end() - b);
}

struct KeywordArg {
  std::size_t name_index;
  Range value;
};

std::vector<KeywordArg> KeywordArgs(const TokenStream& ts, std::size_t open) {
  std::vector<KeywordArg> out;
  for (const Range& arg : SplitTopLevel(ts, open + 1, ts.match[open])) {
    const auto [b, e] = arg;
    if (e - b >= 3 && ts.tokens[b].kind == TokenKind::kName &&
        ts.tokens[b + 1].Is(TokenKind::kOp, "=")) {
      out.push_back({b, {b + 2, e}});
    }
  }
  return out;
}

struct CallInfo {
  bool is_call = false;
  std::size_t chain_begin = 0;  // first token of the callee chain
  std::string callee;           // resolved dotted callee; empty if anonymous
};

class FileScanner {
 public:
  FileScanner(std::string_view source, std::string_view path, const FlagMatcher& matcher)
      : source_(source), path_(path), matcher_(matcher) {}

  FileScan Run() {
    if (!IsValidUtf8(source_)) {
      out_.warnings.push_back({path_, 1, 1, "file is not valid UTF-8; skipped"});
      return std::move(out_);
    }
    ts_ = Tokenize(source_);
    for (const auto& w : ts_.warnings) out_.warnings.push_back({path_, w.line, w.column, w.message});
    const std::size_t n = ts_.tokens.size();
    enclosing_.assign(n, -1);
    owner_.assign(n, TokenStream::kNoMatch);
    calls_.assign(n, CallInfo{});

    CollectAliases();
    ComputeScopes();
    ClassifyCalls();
    ComputeOwners();

    for (std::size_t i = 0; i < n; ++i) {
      const Token& t = ts_.tokens[i];
      if (t.kind == TokenKind::kOpen && t.text == "(" && calls_[i].is_call) VisitCall(i);
      if (t.kind == TokenKind::kOpen && t.text == "{") VisitDict(i);
      if (t.line_start && t.kind == TokenKind::kName) VisitAssignment(i);
    }
    std::stable_sort(out_.sites.begin(), out_.sites.end(), SiteLess);
    return std::move(out_);
  }

 private:
  Location LocationOf(std::size_t index) const {
    const Token& t = ts_.tokens[index];
    return Location{path_, t.line, t.column, t.offset};
  }

  std::optional<std::string> EnclosingOf(std::size_t index) const {
    const int scope = enclosing_[index];
    if (scope < 0) return std::nullopt;
    return scope_names_[static_cast<std::size_t>(scope)];
  }

  const std::vector<FlagKind>& KeywordKinds(std::string_view name) {
    auto it = keyword_cache_.find(std::string(name));
    if (it == keyword_cache_.end()) {
      it = keyword_cache_.emplace(std::string(name), matcher_.KeywordKinds(name)).first;
    }
    return it->second;
  }

  void Emit(const FlagKind& kind, NormalizedValue value, std::size_t at,
            std::optional<Location> call_site, std::optional<std::string> constructor) {
    FlagSite site;
    site.kind = kind;
    site.value = std::move(value);
    site.location = LocationOf(at);
    site.enclosing_construct = EnclosingOf(at);
    site.constructor_name = std::move(constructor);
    site.call_site = std::move(call_site);
    site.provenance = Provenance::kExplicit;
    out_.sites.push_back(std::move(site));
  }

  // from M import A as B  /  import M.N as X
  void CollectAliases() {
    const auto& toks = ts_.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if (!toks[i].line_start || toks[i].kind != TokenKind::kName) continue;
      if (toks[i].text == "from") {
        std::string module;
        std::size_t j = i + 1;
        while (j < toks.size() && !toks[j].Is(TokenKind::kName, "import") &&
               toks[j].kind != TokenKind::kNewline) {
          module += toks[j].text;
          ++j;
        }
        if (j >= toks.size() || toks[j].kind == TokenKind::kNewline) continue;
        ++j;
        std::size_t end = j;
        while (end < toks.size() && toks[end].kind != TokenKind::kNewline) ++end;
        for (std::size_t k = j; k < end; ++k) {
          if (toks[k].kind != TokenKind::kName) continue;
          if (k > j && toks[k - 1].Is(TokenKind::kName, "as")) continue;
          if (toks[k].text == "as") continue;
          std::string alias(toks[k].text);
          if (k + 2 < end && toks[k + 1].Is(TokenKind::kName, "as") &&
              toks[k + 2].kind == TokenKind::kName) {
            alias = std::string(toks[k + 2].text);
          }
          const std::string sep = (!module.empty() && module.back() == '.') ? "" : ".";
          aliases_[alias] = module + sep + std::string(toks[k].text);
        }
      } else if (toks[i].text == "import") {
        std::size_t end = i + 1;
        while (end < toks.size() && toks[end].kind != TokenKind::kNewline) ++end;
        std::string dotted;
        for (std::size_t k = i + 1; k < end; ++k) {
          const Token& t = toks[k];
          if (t.Is(TokenKind::kName, "as") && k + 1 < end) {
            aliases_[std::string(toks[k + 1].text)] = dotted;
            ++k;
          } else if (t.Is(TokenKind::kOp, ",")) {
            dotted.clear();
          } else {
            dotted += t.text;
          }
        }
      }
    }
  }

  void ComputeScopes() {
    struct Open {
      int indent;
      int id;
    };
    std::vector<Open> stack;
    const auto& toks = ts_.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const Token& t = toks[i];
      if (t.line_start) {
        while (!stack.empty() && stack.back().indent >= t.indent) stack.pop_back();
        std::size_t k = i;
        if (t.Is(TokenKind::kName, "async") && k + 1 < toks.size()) ++k;
        if ((toks[k].Is(TokenKind::kName, "def") || toks[k].Is(TokenKind::kName, "class")) &&
            k + 1 < toks.size() && toks[k + 1].kind == TokenKind::kName) {
          scope_names_.emplace_back(toks[k + 1].text);
          stack.push_back({t.indent, static_cast<int>(scope_names_.size() - 1)});
        }
      }
      enclosing_[i] = stack.empty() ? -1 : stack.back().id;
    }
  }

  std::string Resolve(std::string chain) const {
    const auto dot = chain.find('.');
    const std::string head = chain.substr(0, dot);
    auto it = aliases_.find(head);
    if (it == aliases_.end()) return chain;
    return dot == std::string::npos ? it->second : it->second + chain.substr(dot);
  }

  void ClassifyCalls() {
    const auto& toks = ts_.tokens;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (!toks[i].Is(TokenKind::kOpen, "(")) continue;
      const Token& prev = toks[i - 1];
      CallInfo info;
      if (prev.kind == TokenKind::kName) {
        std::size_t b = i - 1;
        while (b >= 2 && toks[b - 1].Is(TokenKind::kOp, ".") && toks[b - 2].kind == TokenKind::kName) {
          b -= 2;
        }
        const bool dotted_tail = b >= 1 && toks[b - 1].Is(TokenKind::kOp, ".");
        if (b == i - 1 && !dotted_tail && IsReserved(prev.text)) continue;
        if (b >= 1 && (toks[b - 1].Is(TokenKind::kName, "def") ||
                       toks[b - 1].Is(TokenKind::kName, "class"))) {
          continue;
        }
        std::string chain;
        for (std::size_t k = b; k < i; ++k) chain += toks[k].text;
        info.is_call = true;
        info.chain_begin = b;
        info.callee = dotted_tail ? chain : Resolve(chain);
      } else if (prev.kind == TokenKind::kClose && prev.text != "}") {
        info.is_call = true;
        info.chain_begin = i;
      } else {
        continue;
      }
      calls_[i] = std::move(info);
    }
  }

  // owner_[i]: index of the innermost call parenthesis enclosing token i.
  void ComputeOwners() {
    std::vector<std::size_t> stack;
    const auto& toks = ts_.tokens;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const Token& t = toks[i];
      if (t.kind == TokenKind::kClose) {
        auto it = std::find_if(stack.rbegin(), stack.rend(),
                               [&](std::size_t open) { return ts_.match[open] == i; });
        if (it != stack.rend()) stack.erase(std::next(it).base(), stack.end());
      }
      for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        if (calls_[*it].is_call) {
          owner_[i] = *it;
          break;
        }
      }
      if (t.kind == TokenKind::kOpen) stack.push_back(i);
    }
  }

  std::optional<Location> CallSiteOf(std::size_t open) const {
    if (open == TokenStream::kNoMatch) return std::nullopt;
    return LocationOf(calls_[open].chain_begin);
  }

  static std::optional<std::string> LastComponent(const std::string& callee) {
    if (callee.empty()) return std::nullopt;
    const auto dot = callee.rfind('.');
    return dot == std::string::npos ? callee : callee.substr(dot + 1);
  }

  void VisitCall(std::size_t open) {
    const CallInfo& info = calls_[open];
    const auto constructor = LastComponent(info.callee);
    const Location callee_loc = LocationOf(info.chain_begin);
    if (!info.callee.empty()) {
      for (const FlagKind& kind : matcher_.CallKinds(info.callee)) {
        Emit(kind, StrVal{info.callee}, info.chain_begin, callee_loc, constructor);
      }
    }
    if (ts_.match[open] == TokenStream::kNoMatch) {
      const Token& t = ts_.tokens[open];
      out_.warnings.push_back(
          {path_, t.line, t.column, "call arguments have unbalanced brackets; region skipped"});
      return;
    }
    for (const KeywordArg& arg : KeywordArgs(ts_, open)) {
      const std::string_view name = ts_.tokens[arg.name_index].text;
      const auto& kinds = KeywordKinds(name);
      if (kinds.empty()) continue;
      const NormalizedValue value = NormalizeValue(Slice(source_, ts_, arg.value));
      for (const FlagKind& kind : kinds) {
        Emit(kind, value, arg.name_index, callee_loc, constructor);
      }
    }
  }

  void VisitDict(std::size_t open) {
    const std::size_t close = ts_.match[open];
    if (close == TokenStream::kNoMatch) return;
    for (const Range& entry : SplitTopLevel(ts_, open + 1, close)) {
      const auto [b, e] = entry;
      std::size_t colon = b;
      while (colon < e && ts_.tokens[colon].kind == TokenKind::kString) ++colon;
      if (colon == b || colon + 1 >= e || !ts_.tokens[colon].Is(TokenKind::kOp, ":")) continue;
      std::string key;
      for (std::size_t k = b; k < colon; ++k) key += DecodeStringLiteral(ts_.tokens[k].text);
      const auto& kinds = KeywordKinds(key);
      if (kinds.empty()) continue;
      const NormalizedValue value = NormalizeValue(Slice(source_, ts_, {colon + 1, e}));
      const std::size_t owner = owner_[open];
      std::optional<std::string> constructor;
      if (owner != TokenStream::kNoMatch) constructor = LastComponent(calls_[owner].callee);
      for (const FlagKind& kind : kinds) Emit(kind, value, b, CallSiteOf(owner), constructor);
    }
  }

  // name = value, self.name = value, name: T = value at statement start.
  void VisitAssignment(std::size_t start) {
    const auto& toks = ts_.tokens;
    std::size_t last = start;
    while (last + 2 < toks.size() && toks[last + 1].Is(TokenKind::kOp, ".") &&
           toks[last + 2].kind == TokenKind::kName) {
      last += 2;
    }
    std::size_t k = last + 1;
    if (k >= toks.size()) return;
    if (!toks[k].Is(TokenKind::kOp, "=") && !toks[k].Is(TokenKind::kOp, ":")) return;
    // Statement extent and the last top-level '='.
    std::size_t end = k;
    std::size_t eq = toks[k].Is(TokenKind::kOp, "=") ? k : TokenStream::kNoMatch;
    for (std::size_t j = k + 1; j < toks.size(); ++j) {
      const Token& t = toks[j];
      if (t.kind == TokenKind::kNewline || t.Is(TokenKind::kOp, ";")) break;
      if (t.kind == TokenKind::kOpen) {
        if (ts_.match[j] == TokenStream::kNoMatch) return;
        j = ts_.match[j];
        end = j;
        continue;
      }
      if (t.Is(TokenKind::kOp, "=")) eq = j;
      end = j;
    }
    if (eq == TokenStream::kNoMatch || eq >= end) return;
    const auto& kinds = KeywordKinds(toks[last].text);
    if (kinds.empty()) return;
    const NormalizedValue value = NormalizeValue(Slice(source_, ts_, {eq + 1, end + 1}));
    for (const FlagKind& kind : kinds) Emit(kind, value, last, std::nullopt, std::nullopt);
  }

  std::string_view source_;
  std::string path_;
  const FlagMatcher& matcher_;
  TokenStream ts_;
  std::vector<int> enclosing_;
  std::vector<std::string> scope_names_;
  std::vector<std::size_t> owner_;
  std::vector<CallInfo> calls_;
  std::unordered_map<std::string, std::string> aliases_;
  std::unordered_map<std::string, std::vector<FlagKind>> keyword_cache_;
  FileScan out_;
};

}  // namespace

FileScan ScanFile(std::string_view source, std::string_view path, const FlagMatcher& matcher) {
  return FileScanner(source, path, matcher).Run();
}

CallArguments ExtractCallArguments(std::string_view region) {
  CallArguments out;
  const TokenStream ts = Tokenize(region);
  if (ts.tokens.empty() || !ts.tokens[0].Is(TokenKind::kOpen, "(")) {
    out.warnings.push_back("region does not start with '('");
    return out;
  }
  const std::size_t close = ts.match[0];
  const auto inside = [&](const TokenizeWarning& w) {
    if (close == TokenStream::kNoMatch) return true;
    const Token& c = ts.tokens[close];
    return std::pair(w.line, w.column) <= std::pair(c.line, c.column);
  };
  if (close == TokenStream::kNoMatch || std::any_of(ts.warnings.begin(), ts.warnings.end(), inside)) {
    out.warnings.push_back("unbalanced brackets; region abandoned");
    return out;
  }
  for (const KeywordArg& arg : KeywordArgs(ts, 0)) {
    out.keywords[std::string(ts.tokens[arg.name_index].text)] =
        NormalizeValue(Slice(region, ts, arg.value));
  }
  return out;
}

}  // namespace agentaudit
