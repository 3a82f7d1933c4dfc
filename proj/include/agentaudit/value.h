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

#ifndef AGENTAUDIT_VALUE_H_
#define AGENTAUDIT_VALUE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace agentaudit {

class NormalizedValue;

struct AbsentVal {
  bool operator==(const AbsentVal&) const = default;
};
struct BoolVal {
  bool value;
  bool operator==(const BoolVal&) const = default;
};
struct IntVal {
  std::int64_t value;
  bool operator==(const IntVal&) const = default;
};
struct StrVal {
  std::string value;
  bool operator==(const StrVal&) const = default;
};
// The verbatim source expression, kept for evidence display.
struct UnresolvedVal {
  std::string raw;
  bool operator==(const UnresolvedVal&) const = default;
};
// Entries are sorted by key with unique keys; a repeated key in a dict
// literal keeps the last value, as the host language does.
struct MappingVal {
  std::vector<std::pair<std::string, NormalizedValue>> entries;

  const NormalizedValue* Find(std::string_view key) const;
  bool operator==(const MappingVal& other) const;
};

// A statically read value of a flag.
class NormalizedValue {
 public:
  using Variant = std::variant<AbsentVal, BoolVal, IntVal, StrVal, MappingVal, UnresolvedVal>;

  NormalizedValue() : v_(AbsentVal{}) {}
  template <typename T>
    requires std::is_constructible_v<Variant, T&&> &&
             (!std::is_same_v<std::remove_cvref_t<T>, NormalizedValue>)
  NormalizedValue(T&& v) : v_(std::forward<T>(v)) {}  // NOLINT(implicit)

  const Variant& variant() const { return v_; }

  template <typename T>
  bool Is() const {
    return std::holds_alternative<T>(v_);
  }
  template <typename T>
  const T* As() const {
    return std::get_if<T>(&v_);
  }

  bool IsFalse() const;
  bool IsResolved() const { return !Is<UnresolvedVal>(); }

  // Python-like rendering: False, 5, 'text', {'k': True}, the raw text of an
  // unresolved expression, or <absent>.
  std::string ToSource() const;

  bool operator==(const NormalizedValue& other) const { return v_ == other.v_; }

 private:
  Variant v_;
};

MappingVal MakeMapping(std::vector<std::pair<std::string, NormalizedValue>> entries);

// Literals True/False, integer literals, string literals in any quoting
// style (adjacent literals concatenate), parenthesized literals and dict
// literals with string keys become the matching variant. Anything else is
// UnresolvedVal holding `expression` unchanged.
NormalizedValue NormalizeValue(std::string_view expression);

// JSON object model: null, bool, integer, string and object map directly;
// unresolved values become {"$unresolved": raw}.
nlohmann::json ValueToJson(const NormalizedValue& value);
NormalizedValue ValueFromJson(const nlohmann::json& json);

}  // namespace agentaudit

#endif  // AGENTAUDIT_VALUE_H_
