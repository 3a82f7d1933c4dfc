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

#ifndef AGENTAUDIT_TAXONOMY_H_
#define AGENTAUDIT_TAXONOMY_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace agentaudit {

// The five code-inspectable autonomy attributes. Actions and Environment
// form the impact axis; the remaining three form the oversight axis.
enum class Attribute {
  kActions,
  kEnvironment,
  kOrchestration,
  kHumanInTheLoop,
  kObservability,
};

inline constexpr std::array<Attribute, 5> kAllAttributes = {
    Attribute::kActions, Attribute::kEnvironment, Attribute::kOrchestration,
    Attribute::kHumanInTheLoop, Attribute::kObservability};

enum class Axis { kImpact, kOversight };

Axis AxisOf(Attribute attribute);

// Greater means more autonomous.
enum class Level { kLower = 0, kMiddle = 1, kHigher = 2 };

inline constexpr std::array<Level, 3> kAllLevels = {Level::kLower, Level::kMiddle,
                                                    Level::kHigher};

// A static scan may find no evidence at all; that is reported as
// std::nullopt ("unknown") and sorts below kLower.
using Rating = std::optional<Level>;

// Rank usable for ordering ratings: unknown = -1, lower = 0, ...
inline int RatingRank(Rating rating) {
  return rating ? static_cast<int>(*rating) : -1;
}

// Stable lowercase identifiers used in every document format.
std::string_view AttributeName(Attribute attribute);
std::string_view AttributeTitle(Attribute attribute);
std::string_view LevelName(Level level);
std::string_view RatingName(Rating rating);

// Case-insensitive; accepts "human_in_the_loop", "human-in-the-loop",
// "humanintheloop" and "hitl" for the same attribute.
std::optional<Attribute> ParseAttribute(std::string_view text);
std::optional<Level> ParseLevel(std::string_view text);

}  // namespace agentaudit

#endif  // AGENTAUDIT_TAXONOMY_H_
