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


#include "agentaudit/taxonomy.h"

#include <gtest/gtest.h>

namespace agentaudit {
namespace {

TEST(TaxonomyTest, AttributesPartitionIntoTwoAxes) {
  int impact = 0;
  int oversight = 0;
  for (Attribute a : kAllAttributes) (AxisOf(a) == Axis::kImpact ? impact : oversight)++;
  EXPECT_EQ(impact, 2);
  EXPECT_EQ(oversight, 3);
  EXPECT_EQ(AxisOf(Attribute::kEnvironment), Axis::kImpact);
  EXPECT_EQ(AxisOf(Attribute::kObservability), Axis::kOversight);
}

TEST(TaxonomyTest, LevelsAreTotallyOrderedWithUnknownLowest) {
  EXPECT_LT(RatingRank(std::nullopt), RatingRank(Level::kLower));
  EXPECT_LT(RatingRank(Level::kLower), RatingRank(Level::kMiddle));
  EXPECT_LT(RatingRank(Level::kMiddle), RatingRank(Level::kHigher));
}

TEST(TaxonomyTest, NamesRoundTrip) {
  for (Attribute a : kAllAttributes) EXPECT_EQ(ParseAttribute(AttributeName(a)), a);
  for (Level l : kAllLevels) EXPECT_EQ(ParseLevel(LevelName(l)), l);
  EXPECT_EQ(RatingName(std::nullopt), "unknown");
}

TEST(TaxonomyTest, ParsingIsLenient) {
  EXPECT_EQ(ParseAttribute("Human-in-the-loop"), Attribute::kHumanInTheLoop);
  EXPECT_EQ(ParseAttribute("HITL"), Attribute::kHumanInTheLoop);
  EXPECT_EQ(ParseAttribute("Action"), Attribute::kActions);
  EXPECT_EQ(ParseLevel("HIGHER"), Level::kHigher);
  EXPECT_FALSE(ParseAttribute("goals"));
  EXPECT_FALSE(ParseLevel("unknown"));
}

}  // namespace
}  // namespace agentaudit
