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

#include <algorithm>
#include <cctype>
#include <string>

namespace agentaudit {
namespace {

std::string Canonical(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '_' || c == '-' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

}  // namespace

Axis AxisOf(Attribute attribute) {
  switch (attribute) {
    case Attribute::kActions:
    case Attribute::kEnvironment:
      return Axis::kImpact;
    default:
      return Axis::kOversight;
  }
}

std::string_view AttributeName(Attribute attribute) {
  switch (attribute) {
    case Attribute::kActions:
      return "actions";
    case Attribute::kEnvironment:
      return "environment";
    case Attribute::kOrchestration:
      return "orchestration";
    case Attribute::kHumanInTheLoop:
      return "human_in_the_loop";
    case Attribute::kObservability:
      return "observability";
  }
  return "?";
}

std::string_view AttributeTitle(Attribute attribute) {
  switch (attribute) {
    case Attribute::kActions:
      return "Actions";
    case Attribute::kEnvironment:
      return "Environment";
    case Attribute::kOrchestration:
      return "Orchestration";
    case Attribute::kHumanInTheLoop:
      return "Human-in-the-loop";
    case Attribute::kObservability:
      return "Observability";
  }
  return "?";
}

std::string_view LevelName(Level level) {
  switch (level) {
    case Level::kLower:
      return "lower";
    case Level::kMiddle:
      return "middle";
    case Level::kHigher:
      return "higher";
  }
  return "?";
}

std::string_view RatingName(Rating rating) {
  return rating ? LevelName(*rating) : std::string_view("unknown");
}

std::optional<Attribute> ParseAttribute(std::string_view text) {
  const std::string key = Canonical(text);
  if (key == "actions" || key == "action") return Attribute::kActions;
  if (key == "environment") return Attribute::kEnvironment;
  if (key == "orchestration") return Attribute::kOrchestration;
  if (key == "humanintheloop" || key == "hitl") return Attribute::kHumanInTheLoop;
  if (key == "observability") return Attribute::kObservability;
  return std::nullopt;
}

std::optional<Level> ParseLevel(std::string_view text) {
  const std::string key = Canonical(text);
  if (key == "lower") return Level::kLower;
  if (key == "middle") return Level::kMiddle;
  if (key == "higher") return Level::kHigher;
  return std::nullopt;
}

}  // namespace agentaudit
