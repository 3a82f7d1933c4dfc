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


#include "agentaudit/report.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace agentaudit {
namespace {

using nlohmann::json;

json SiteToJson(const FlagSite& s) {
  json out = {{"path", s.location.path},
              {"line", s.location.line},
              {"column", s.location.column},
              {"flag", s.kind.name()},
              {"value", ValueToJson(s.value)},
              {"provenance", ProvenanceName(s.provenance)}};
  if (s.constructor_name) out["constructor"] = *s.constructor_name;
  if (s.enclosing_construct) out["enclosing"] = *s.enclosing_construct;
  return out;
}

// Plain-text table with left-aligned columns separated by two spaces.
std::string Table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string Revision(const RepoScorecard& card) {
  if (card.repo.revision) return *card.repo.revision;
  return card.repo.IsRemote() ? "floating" : "working tree";
}

std::string RenderReadable(const RepoScorecard& card, bool timestamps) {
  std::ostringstream out;
  out << "Autonomy scorecard: " << card.repo.name << "\n\n";
  std::vector<std::vector<std::string>> header = {
      {"repository", card.repo.locator},
      {"revision", Revision(card)},
      {"reproducibility", card.repo.Reproducibility()},
      {"rule pack", card.rulepack_id},
      {"manifest", card.manifest_hash},
      {"files scanned", std::to_string(card.stats.files_scanned)},
      {"files with warnings", std::to_string(card.stats.files_with_warnings)}};
  if (card.repo.subdir) header.insert(header.begin() + 2, {"subdirectory", *card.repo.subdir});
  if (timestamps && card.generated_at) header.push_back({"generated", *card.generated_at});
  out << Table(header) << "\n";

  std::vector<std::vector<std::string>> rows = {{"attribute", "axis", "level", "mixed", "evidence"}};
  for (const auto& [attribute, score] : card.scores) {
    rows.push_back({std::string(AttributeTitle(attribute)),
                    AxisOf(attribute) == Axis::kImpact ? "impact" : "oversight",
                    std::string(RatingName(score.level)), score.mixed ? "yes" : "no",
                    std::to_string(score.evidence.size())});
  }
  out << Table(rows);

  if (!card.warnings.empty() || !card.scan_warnings.empty()) {
    out << "\nWarnings\n";
    for (const auto& w : card.warnings) out << "  ! " << w << "\n";
    for (const auto& w : card.scan_warnings) {
      out << "  ! " << w.path << ":" << w.line << ":" << w.column << ": " << w.message << "\n";
    }
  }

  bool any_notes = false;
  for (const auto& [attribute, score] : card.scores) any_notes |= !score.notes.empty();
  if (any_notes) {
    out << "\nNotes\n";
    for (const auto& [attribute, score] : card.scores) {
      for (const auto& n : score.notes) out << "  " << AttributeName(attribute) << ": " << n << "\n";
    }
  }

  out << "\nEvidence\n";
  for (const auto& [attribute, score] : card.scores) {
    out << "  " << AttributeTitle(attribute) << " (" << RatingName(score.level) << ")\n";
    if (score.evidence.empty()) {
      out << "    (none)\n";
      continue;
    }
    std::vector<std::vector<std::string>> lines;
    for (const FlagSite& s : score.evidence) {
      lines.push_back({"    " + s.location.path + ":" + std::to_string(s.location.line) + ":" +
                           std::to_string(s.location.column),
                       s.kind.name(), s.value.ToSource(), std::string(ProvenanceName(s.provenance))});
    }
    out << Table(lines);
  }
  return out.str();
}

constexpr std::array<int, 4> kRowOrder = {0, 1, 2, -1};  // lower, middle, higher, unknown

std::string RowTitle(int rank) {
  std::string title = rank < 0 ? "unknown" : std::string(LevelName(static_cast<Level>(rank)));
  title[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(title[0])));
  return title;
}

}  // namespace

json ScorecardToJson(const RepoScorecard& card, bool timestamps) {
  json scores = json::object();
  for (const auto& [attribute, score] : card.scores) {
    json evidence = json::array();
    for (const FlagSite& s : score.evidence) evidence.push_back(SiteToJson(s));
    scores[std::string(AttributeName(attribute))] = {{"level", RatingName(score.level)},
                                                     {"mixed", score.mixed},
                                                     {"evidence", evidence},
                                                     {"notes", score.notes}};
  }
  json scan_warnings = json::array();
  for (const auto& w : card.scan_warnings) {
    scan_warnings.push_back({{"path", w.path}, {"line", w.line}, {"column", w.column}, {"message", w.message}});
  }
  json repo = {{"locator", card.repo.locator}, {"name", card.repo.name}};
  if (card.repo.subdir) repo["subdir"] = *card.repo.subdir;
  json out = {{"schema_version", "1"},
              {"repo", repo},
              {"revision", Revision(card)},
              {"reproducibility", card.repo.Reproducibility()},
              {"rulepack", card.rulepack_id},
              {"manifest_hash", card.manifest_hash},
              {"scores", scores},
              {"warnings", card.warnings},
              {"scan_warnings", scan_warnings},
              {"stats",
               {{"files_scanned", card.stats.files_scanned},
                {"files_with_warnings", card.stats.files_with_warnings},
                {"warnings", card.stats.warning_count}}}};
  if (timestamps && card.generated_at) out["generated_at"] = *card.generated_at;
  return out;
}

std::string RenderScorecard(const RepoScorecard& card, ReportFormat format, bool timestamps) {
  if (format == ReportFormat::kStructured) return ScorecardToJson(card, timestamps).dump(2) + "\n";
  return RenderReadable(card, timestamps);
}

std::vector<int> CorpusMatrix::Cell(Rating rating, Attribute attribute) const {
  auto row = cells.find(RatingRank(rating));
  if (row == cells.end()) return {};
  auto cell = row->second.find(attribute);
  return cell == row->second.end() ? std::vector<int>{} : cell->second;
}

CorpusMatrix BuildCorpusMatrix(std::span<const RepoScorecard> cards) {
  CorpusMatrix m;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    const int key = static_cast<int>(i) + 1;
    m.legend.push_back(cards[i].repo.name);
    for (Attribute a : kAllAttributes) {
      auto it = cards[i].scores.find(a);
      const Rating r = it == cards[i].scores.end() ? Rating{} : it->second.level;
      m.cells[RatingRank(r)][a].push_back(key);
    }
  }
  for (auto& [rank, row] : m.cells) {
    for (auto& [a, keys] : row) std::sort(keys.begin(), keys.end());
  }
  return m;
}

std::string RenderCorpusMatrix(const CorpusMatrix& matrix, ReportFormat format) {
  if (format == ReportFormat::kStructured) {
    json cells = json::object();
    for (int rank : kRowOrder) {
      json row = json::object();
      for (Attribute a : kAllAttributes) {
        row[std::string(AttributeName(a))] = matrix.Cell(rank < 0 ? Rating{} : Rating(static_cast<Level>(rank)), a);
      }
      std::string name = RowTitle(rank);
      std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
      cells[name] = row;
    }
    json legend = json::object();
    for (std::size_t i = 0; i < matrix.legend.size(); ++i) legend[std::to_string(i + 1)] = matrix.legend[i];
    return json{{"schema_version", "1"}, {"cells", cells}, {"legend", legend}}.dump(2) + "\n";
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"Level"};
  for (Attribute a : kAllAttributes) header.emplace_back(AttributeTitle(a));
  rows.push_back(header);
  for (int rank : kRowOrder) {
    std::vector<std::string> row = {RowTitle(rank)};
    for (Attribute a : kAllAttributes) {
      const auto keys = matrix.Cell(rank < 0 ? Rating{} : Rating(static_cast<Level>(rank)), a);
      std::string text;
      for (int k : keys) text += (text.empty() ? "" : ", ") + std::to_string(k);
      row.push_back(text.empty() ? "--" : text);
    }
    rows.push_back(row);
  }
  std::string out = Table(rows);
  out += "\nKey\n";
  for (std::size_t i = 0; i < matrix.legend.size(); ++i) {
    out += "  " + std::to_string(i + 1) + ": " + matrix.legend[i] + "\n";
  }
  return out;
}

}  // namespace agentaudit
