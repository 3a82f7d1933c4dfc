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


#ifndef AGENTAUDIT_REPORT_H_
#define AGENTAUDIT_REPORT_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "agentaudit/scoring.h"
#include "agentaudit/taxonomy.h"
#include "json.hpp"

namespace agentaudit {

enum class ReportFormat { kStructured, kReadable };

nlohmann::json ScorecardToJson(const RepoScorecard& card, bool timestamps = true);

// Documents end with a newline. Timestamps are omitted when `timestamps` is
// false or the card carries none.
std::string RenderScorecard(const RepoScorecard& card, ReportFormat format,
                            bool timestamps = true);

struct CorpusMatrix {
  std::vector<std::string> legend;  // legend[i] names repo key i + 1
  // Rating (unset = unknown) -> attribute -> ascending repo keys.
  std::map<int, std::map<Attribute, std::vector<int>>> cells;  // keyed by RatingRank

  std::vector<int> Cell(Rating rating, Attribute attribute) const;
};

// Repo keys are 1-based positions in `cards`.
CorpusMatrix BuildCorpusMatrix(std::span<const RepoScorecard> cards);

std::string RenderCorpusMatrix(const CorpusMatrix& matrix, ReportFormat format);
inline std::string RenderCorpusMatrix(std::span<const RepoScorecard> cards, ReportFormat format) {
  return RenderCorpusMatrix(BuildCorpusMatrix(cards), format);
}

}  // namespace agentaudit

#endif  // AGENTAUDIT_REPORT_H_
