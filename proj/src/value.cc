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

#include "agentaudit/value.h"

#include <algorithm>
#include <charconv>
#include <optional>

#include "agentaudit/tokenizer.h"

namespace agentaudit {

const NormalizedValue* MappingVal::Find(std::string_view key) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), key,
                             [](const auto& e, std::string_view k) { return e.first < k; });
  if (it == entries.end() || it->first != key) return nullptr;
  return &it->second;
}

bool MappingVal::operator==(const MappingVal& other) const {
  if (entries.size() != other.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != other.entries[i].first) return false;
    if (!(entries[i].second == other.entries[i].second)) return false;
  }
  return true;
}

MappingVal MakeMapping(std::vector<std::pair<std::string, NormalizedValue>> entries) {
  // Last occurrence of a key wins.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  MappingVal out;
  for (auto& e : entries) {
    if (!out.entries.empty() && out.entries.back().first == e.first) {
      out.entries.back().second = std::move(e.second);
    } else {
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

bool NormalizedValue::IsFalse() const {
  const auto* b = As<BoolVal>();
  return b != nullptr && !b->value;
}

namespace {

std::string QuotePython(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\'': out += "\\'"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out + "'";
}

}  // namespace

std::string NormalizedValue::ToSource() const {
  struct Visitor {
    std::string operator()(const AbsentVal&) const { return "<absent>"; }
    std::string operator()(const BoolVal& v) const { return v.value ? "True" : "False"; }
    std::string operator()(const IntVal& v) const { return std::to_string(v.value); }
    std::string operator()(const StrVal& v) const { return QuotePython(v.value); }
    std::string operator()(const UnresolvedVal& v) const { return v.raw; }
    std::string operator()(const MappingVal& v) const {
      std::string out = "{";
      for (std::size_t i = 0; i < v.entries.size(); ++i) {
        if (i) out += ", ";
        out += QuotePython(v.entries[i].first) + ": " + v.entries[i].second.ToSource();
      }
      return out + "}";
    }
  };
  return std::visit(Visitor{}, v_);
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view source, const TokenStream& stream)
      : source_(source), ts_(stream) {}

  // Parses tokens [begin, end) as a literal; nullopt when not a literal.
  std::optional<NormalizedValue> Parse(std::size_t begin, std::size_t end) const {
    if (begin >= end) return std::nullopt;
    const auto& toks = ts_.tokens;
    const Token& first = toks[begin];

    if (first.kind == TokenKind::kOpen && ts_.match[begin] == end - 1) {
      if (first.text == "(") {
        if (HasTopLevelComma(begin + 1, end - 1)) return std::nullopt;
        return Parse(begin + 1, end - 1);
      }
      if (first.text == "{") return ParseDict(begin + 1, end - 1);
      return std::nullopt;
    }
    if (end - begin == 1 && first.kind == TokenKind::kName) {
      if (first.text == "True") return BoolVal{true};
      if (first.text == "False") return BoolVal{false};
      return std::nullopt;
    }
    if (first.kind == TokenKind::kNumber ||
        (first.kind == TokenKind::kOp && (first.text == "-" || first.text == "+"))) {
      return ParseInt(begin, end);
    }
    if (first.kind == TokenKind::kString) {
      std::string joined;
      for (std::size_t i = begin; i < end; ++i) {
        if (toks[i].kind != TokenKind::kString) return std::nullopt;
        bool fstring = false;
        std::string part = DecodeStringLiteral(toks[i].text, &fstring);
        if (fstring && HasInterpolation(part)) return std::nullopt;
        joined += part;
      }
      return StrVal{std::move(joined)};
    }
    return std::nullopt;
  }

  std::string_view Slice(std::size_t begin, std::size_t end) const {
    const auto& toks = ts_.tokens;
    return source_.substr(toks[begin].offset, toks[end - 1].end() - toks[begin].offset);
  }

 private:
  static bool HasInterpolation(const std::string& body) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '{') {
        if (i + 1 < body.size() && body[i + 1] == '{') {
          ++i;
          continue;
        }
        return true;
      }
    }
    return false;
  }

  bool HasTopLevelComma(std::size_t begin, std::size_t end) const {
    for (std::size_t i = begin; i < end; ++i) {
      const Token& t = ts_.tokens[i];
      if (t.kind == TokenKind::kOpen && ts_.match[i] != TokenStream::kNoMatch) {
        i = ts_.match[i];
        continue;
      }
      if (t.Is(TokenKind::kOp, ",")) return true;
    }
    return false;
  }

  std::optional<NormalizedValue> ParseInt(std::size_t begin, std::size_t end) const {
    const auto& toks = ts_.tokens;
    bool negative = false;
    std::size_t i = begin;
    if (toks[i].kind == TokenKind::kOp) {
      negative = toks[i].text == "-";
      ++i;
    }
    if (i + 1 != end || toks[i].kind != TokenKind::kNumber) return std::nullopt;
    std::string digits;
    for (char c : toks[i].text) {
      if (c != '_') digits.push_back(c);
    }
    int base = 10;
    std::size_t skip = 0;
    if (digits.size() > 2 && digits[0] == '0') {
      const char p = static_cast<char>(std::tolower(static_cast<unsigned char>(digits[1])));
      if (p == 'x') base = 16;
      if (p == 'o') base = 8;
      if (p == 'b') base = 2;
      if (base != 10) skip = 2;
    }
    if (base == 10 && digits.size() > 1 && digits[0] == '0') {
      // Python forbids leading zeros except for the literal zero itself.
      if (digits.find_first_not_of('0') != std::string::npos) return std::nullopt;
    }
    std::uint64_t magnitude = 0;
    const char* b = digits.data() + skip;
    const char* e = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(b, e, magnitude, base);
    if (ec != std::errc() || ptr != e || b == e) return std::nullopt;
    constexpr std::uint64_t kMax = static_cast<std::uint64_t>(INT64_MAX);
    if (magnitude > kMax + (negative ? 1 : 0)) return std::nullopt;
    const std::int64_t value =
        negative ? static_cast<std::int64_t>(0 - magnitude) : static_cast<std::int64_t>(magnitude);
    return IntVal{value};
  }

  std::optional<NormalizedValue> ParseDict(std::size_t begin, std::size_t end) const {
    std::vector<std::pair<std::string, NormalizedValue>> entries;
    std::size_t item = begin;
    for (std::size_t i = begin; i <= end; ++i) {
      if (i < end) {
        const Token& t = ts_.tokens[i];
        if (t.kind == TokenKind::kOpen && ts_.match[i] != TokenStream::kNoMatch) {
          i = ts_.match[i];
          continue;
        }
        if (t.Is(TokenKind::kName, "for")) return std::nullopt;
        if (!t.Is(TokenKind::kOp, ",")) continue;
      }
      if (item < i) {
        auto entry = ParseEntry(item, i);
        if (!entry) return std::nullopt;
        entries.push_back(std::move(*entry));
      } else if (i < end) {
        return std::nullopt;  // empty item between commas
      }
      item = i + 1;
    }
    return MakeMapping(std::move(entries));
  }

  std::optional<std::pair<std::string, NormalizedValue>> ParseEntry(std::size_t begin,
                                                                    std::size_t end) const {
    std::size_t colon = end;
    for (std::size_t i = begin; i < end; ++i) {
      const Token& t = ts_.tokens[i];
      if (t.kind == TokenKind::kOpen && ts_.match[i] != TokenStream::kNoMatch) {
        i = ts_.match[i];
        continue;
      }
      if (t.Is(TokenKind::kOp, ":")) {
        colon = i;
        break;
      }
    }
    if (colon == end || colon + 1 >= end) return std::nullopt;
    auto key = Parse(begin, colon);
    if (!key || !key->Is<StrVal>()) return std::nullopt;
    auto value = Parse(colon + 1, end);
    if (!value) value = UnresolvedVal{std::string(Slice(colon + 1, end))};
    return std::make_pair(key->As<StrVal>()->value, std::move(*value));
  }

  std::string_view source_;
  const TokenStream& ts_;
};

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\f");
  return s.substr(first, last - first + 1);
}

}  // namespace

NormalizedValue NormalizeValue(std::string_view expression) {
  const std::string_view text = Trim(expression);
  const TokenStream ts = Tokenize(text);
  std::size_t end = ts.tokens.size();
  while (end > 0 && ts.tokens[end - 1].kind == TokenKind::kNewline) --end;
  // Multi-line expressions contain logical newlines only when brackets are
  // unbalanced; those are never literals.
  for (std::size_t i = 0; i < end; ++i) {
    if (ts.tokens[i].kind == TokenKind::kNewline) return UnresolvedVal{std::string(text)};
  }
  if (!ts.warnings.empty()) return UnresolvedVal{std::string(text)};
  LiteralParser parser(text, ts);
  if (auto v = parser.Parse(0, end)) return std::move(*v);
  return UnresolvedVal{std::string(text)};
}

nlohmann::json ValueToJson(const NormalizedValue& value) {
  struct Visitor {
    nlohmann::json operator()(const AbsentVal&) const { return nullptr; }
    nlohmann::json operator()(const BoolVal& v) const { return v.value; }
    nlohmann::json operator()(const IntVal& v) const { return v.value; }
    nlohmann::json operator()(const StrVal& v) const { return v.value; }
    nlohmann::json operator()(const UnresolvedVal& v) const {
      return nlohmann::json{{"$unresolved", v.raw}};
    }
    nlohmann::json operator()(const MappingVal& v) const {
      nlohmann::json out = nlohmann::json::object();
      for (const auto& [k, e] : v.entries) out[k] = ValueToJson(e);
      return out;
    }
  };
  return std::visit(Visitor{}, value.variant());
}

NormalizedValue ValueFromJson(const nlohmann::json& json) {
  if (json.is_null()) return AbsentVal{};
  if (json.is_boolean()) return BoolVal{json.get<bool>()};
  if (json.is_number_integer()) return IntVal{json.get<std::int64_t>()};
  if (json.is_string()) return StrVal{json.get<std::string>()};
  if (json.is_object()) {
    if (json.size() == 1 && json.contains("$unresolved") && json["$unresolved"].is_string()) {
      return UnresolvedVal{json["$unresolved"].get<std::string>()};
    }
    std::vector<std::pair<std::string, NormalizedValue>> entries;
    for (const auto& [k, v] : json.items()) entries.emplace_back(k, ValueFromJson(v));
    return MakeMapping(std::move(entries));
  }
  return UnresolvedVal{json.dump()};
}

}  // namespace agentaudit
