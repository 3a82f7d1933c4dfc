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


#ifndef AGENTAUDIT_AGREEMENT_H_
#define AGENTAUDIT_AGREEMENT_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agentaudit/taxonomy.h"

namespace agentaudit {

// Rating categories in matrix column order: lower, middle, higher, unknown.
inline constexpr std::size_t kRatingCategories = 4;
std::size_t CategoryIndex(Rating rating);

struct Subject {
  std::string repo;
  Attribute attribute = Attribute::kActions;
  auto operator<=>(const Subject&) const = default;
};

struct RatingsTable {
  std::vector<Subject> subjects;     // sorted, unique
  std::vector<std::string> raters;   // sorted, unique
  std::map<std::pair<Subject, std::string>, Rating> labels;

  // Throws RatingsFormatError when the (subject, rater) cell is already set.
  void Add(const Subject& subject, const std::string& rater, Rating rating);
};

// Delimiter-separated text with header subject,attribute,rater,level. The
// delimiter (comma, semicolon, tab or pipe) is taken from the header line.
RatingsTable ParseRatings(std::string_view text);
RatingsTable ReadRatingsFile(const std::filesystem::path& path);

struct AgreementMatrix {
  std::vector<std::vector<std::int64_t>> counts;  // N rows of k categories
  std::int64_t raters = 0;                        // n, constant per row
  std::vector<Subject> subjects;                  // row labels, when known
};

// Throws IncompleteRatingsError naming every missing (subject, rater) cell.
AgreementMatrix BuildMatrix(const RatingsTable& table,
                            std::optional<Attribute> filter = std::nullopt);

// Fleiss' kappa, evaluated as an exact integer ratio and rounded once.
// Throws DegenerateAgreementError when chance agreement is 1, and
// RatingsFormatError when the matrix violates its invariants.
double FleissKappa(const AgreementMatrix& matrix);

struct KappaEntry {
  std::optional<double> kappa;  // unset when undefined
  std::string reason;
};

// One entry per attribute present in the table.
std::map<Attribute, KappaEntry> PerAttributeAgreement(const RatingsTable& table);

// Mean of the defined per-attribute values; throws DegenerateAgreementError
// when none is defined.
double AverageKappa(const std::map<Attribute, KappaEntry>& per_attribute);

}  // namespace agentaudit

#endif  // AGENTAUDIT_AGREEMENT_H_
