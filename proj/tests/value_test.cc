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

#include <gtest/gtest.h>

namespace agentaudit {
namespace {

TEST(NormalizeValueTest, Literals) {
  EXPECT_EQ(NormalizeValue("False"), NormalizedValue(BoolVal{false}));
  EXPECT_EQ(NormalizeValue("True"), NormalizedValue(BoolVal{true}));
  EXPECT_EQ(NormalizeValue("5"), NormalizedValue(IntVal{5}));
  EXPECT_EQ(NormalizeValue("-3"), NormalizedValue(IntVal{-3}));
  EXPECT_EQ(NormalizeValue("0x1f"), NormalizedValue(IntVal{31}));
  EXPECT_EQ(NormalizeValue("1_000"), NormalizedValue(IntVal{1000}));
  EXPECT_EQ(NormalizeValue("'NEVER'"), NormalizedValue(StrVal{"NEVER"}));
  EXPECT_EQ(NormalizeValue("\"a\" 'b'"), NormalizedValue(StrVal{"ab"}));
  EXPECT_EQ(NormalizeValue("(7)"), NormalizedValue(IntVal{7}));
}

TEST(NormalizeValueTest, NonLiteralsStayVerbatim) {
  EXPECT_EQ(NormalizeValue("os.environ[\"MODE\"]"),
            NormalizedValue(UnresolvedVal{"os.environ[\"MODE\"]"}));
  EXPECT_EQ(NormalizeValue("max(1,2)"), NormalizedValue(UnresolvedVal{"max(1,2)"}));
  EXPECT_EQ(NormalizeValue("f'{x}'"), NormalizedValue(UnresolvedVal{"f'{x}'"}));
  EXPECT_EQ(NormalizeValue("1 + 1"), NormalizedValue(UnresolvedVal{"1 + 1"}));
  EXPECT_EQ(NormalizeValue("(1, 2)"), NormalizedValue(UnresolvedVal{"(1, 2)"}));
  EXPECT_EQ(NormalizeValue("99999999999999999999"),
            NormalizedValue(UnresolvedVal{"99999999999999999999"}));
}

TEST(NormalizeValueTest, Dicts) {
  const NormalizedValue v = NormalizeValue("{\"use_docker\": False, 'work_dir': path, \"n\": 2}");
  const auto* m = v.As<MappingVal>();
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(*m->Find("use_docker"), NormalizedValue(BoolVal{false}));
  EXPECT_EQ(*m->Find("work_dir"), NormalizedValue(UnresolvedVal{"path"}));
  EXPECT_EQ(*m->Find("n"), NormalizedValue(IntVal{2}));
  EXPECT_EQ(m->Find("missing"), nullptr);

  EXPECT_TRUE(NormalizeValue("{}").Is<MappingVal>());
  EXPECT_TRUE(NormalizeValue("{k: 1}").Is<UnresolvedVal>());
  EXPECT_TRUE(NormalizeValue("{**base, 'a': 1}").Is<UnresolvedVal>());
  EXPECT_TRUE(NormalizeValue("{k: v for k, v in x}").Is<UnresolvedVal>());
}

TEST(NormalizeValueTest, DuplicateKeysKeepTheLast) {
  const auto v = NormalizeValue("{'a': 1, 'a': 2}");
  EXPECT_EQ(*v.As<MappingVal>()->Find("a"), NormalizedValue(IntVal{2}));
  EXPECT_EQ(v.As<MappingVal>()->entries.size(), 1u);
}

TEST(NormalizedValueTest, ToSource) {
  EXPECT_EQ(NormalizedValue(BoolVal{false}).ToSource(), "False");
  EXPECT_EQ(NormalizedValue(IntVal{5}).ToSource(), "5");
  EXPECT_EQ(NormalizedValue(StrVal{"it's"}).ToSource(), "'it\\'s'");
  EXPECT_EQ(NormalizedValue(UnresolvedVal{"cfg[\"x\"]"}).ToSource(), "cfg[\"x\"]");
  EXPECT_EQ(NormalizeValue("{'b': 1, 'a': True}").ToSource(), "{'a': True, 'b': 1}");
}

TEST(NormalizedValueTest, IsFalseOnlyForBoolFalse) {
  EXPECT_TRUE(NormalizedValue(BoolVal{false}).IsFalse());
  EXPECT_FALSE(NormalizedValue(IntVal{0}).IsFalse());
  EXPECT_FALSE(NormalizedValue(UnresolvedVal{"False if x else True"}).IsFalse());
}

TEST(ValueJsonTest, RoundTrip) {
  for (const char* expr : {"False", "12", "'s'", "{'a': {'b': False}, 'c': x}", "call(1)"}) {
    const NormalizedValue v = NormalizeValue(expr);
    EXPECT_EQ(ValueFromJson(ValueToJson(v)), v) << expr;
  }
  EXPECT_EQ(ValueFromJson(nullptr), NormalizedValue());
  EXPECT_EQ(ValueToJson(NormalizedValue(UnresolvedVal{"x"})), (nlohmann::json{{"$unresolved", "x"}}));
}

}  // namespace
}  // namespace agentaudit
