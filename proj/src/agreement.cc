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


#include "agentaudit/agreement.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "agentaudit/errors.h"

namespace agentaudit {
namespace {

using Int = __int128;

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Splits one record; double quotes protect delimiters and "" is a literal quote.
std::vector<std::string> SplitRecord(std::string_view line, char delim, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"' && Trim(field).empty()) {
      quoted = was_quoted = true;
      field.clear();
    } else if (c == delim) {
      fields.push_back(was_quoted ? field : Trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw RatingsFormatError("line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(was_quoted ? field : Trim(field));
  return fields;
}

char DetectDelimiter(std::string_view header) {
  for (char d : {',', '\t', ';', '|'}) {
    if (header.find(d) != std::string_view::npos) return d;
  }
  throw RatingsFormatError("header: expected subject,attribute,rater,level");
}

std::string CellName(const Subject& s, const std::string& rater) {
  return "(" + s.repo + ", " + std::string(AttributeName(s.attribute)) + ", " + rater + ")";
}

}  // namespace

std::size_t CategoryIndex(Rating rating) {
  return rating ? static_cast<std::size_t>(*rating) : kRatingCategories - 1;
}

void RatingsTable::Add(const Subject& subject, const std::string& rater, Rating rating) {
  if (!labels.emplace(std::pair(subject, rater), rating).second) {
    throw RatingsFormatError("duplicate rating for " + CellName(subject, rater));
  }
  auto s = std::lower_bound(subjects.begin(), subjects.end(), subject);
  if (s == subjects.end() || *s != subject) subjects.insert(s, subject);
  auto r = std::lower_bound(raters.begin(), raters.end(), rater);
  if (r == raters.end() || *r != rater) raters.insert(r, rater);
}

RatingsTable ParseRatings(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  char delim = 0;
  std::array<std::size_t, 4> column{};  // subject, attribute, rater, level
  std::size_t width = 0;
  RatingsTable table;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (!delim) {
      delim = DetectDelimiter(trimmed);
      const auto header = SplitRecord(trimmed, delim, line_no);
      width = header.size();
      const std::array<std::string, 4> wanted = {"subject", "attribute", "rater", "level"};
      for (std::size_t w = 0; w < wanted.size(); ++w) {
        auto it = std::find_if(header.begin(), header.end(),
                               [&](const std::string& h) { return Lower(h) == wanted[w]; });
        if (it == header.end()) throw RatingsFormatError("header: missing column \"" + wanted[w] + "\"");
        column[w] = static_cast<std::size_t>(it - header.begin());
      }
      continue;
    }
    const auto fields = SplitRecord(line, delim, line_no);
    const std::string where = "line " + std::to_string(line_no);
    if (fields.size() != width) {
      throw RatingsFormatError(where + ": expected " + std::to_string(width) + " fields, found " +
                               std::to_string(fields.size()));
    }
    const std::string& repo = fields[column[0]];
    const std::string& rater = fields[column[2]];
    if (repo.empty() || rater.empty()) throw RatingsFormatError(where + ": empty subject or rater");
    const auto attribute = ParseAttribute(fields[column[1]]);
    if (!attribute) throw RatingsFormatError(where + ": unknown attribute \"" + fields[column[1]] + "\"");
    Rating rating;
    const std::string level = Lower(fields[column[3]]);
    if (level != "unknown") {
      rating = ParseLevel(level);
      if (!rating) throw RatingsFormatError(where + ": unknown level \"" + fields[column[3]] + "\"");
    }
    table.Add({repo, *attribute}, rater, rating);
  }
  if (!delim) throw RatingsFormatError("ratings file is empty");
  if (table.labels.empty()) throw RatingsFormatError("ratings file has no ratings");
  return table;
}

RatingsTable ReadRatingsFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RatingsFormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseRatings(buf.str());
}

AgreementMatrix BuildMatrix(const RatingsTable& table, std::optional<Attribute> filter) {
  AgreementMatrix m;
  m.raters = static_cast<std::int64_t>(table.raters.size());
  std::vector<std::string> missing;
  for (const Subject& s : table.subjects) {
    if (filter && s.attribute != *filter) continue;
    std::vector<std::int64_t> row(kRatingCategories, 0);
    for (const std::string& r : table.raters) {
      auto it = table.labels.find({s, r});
      if (it == table.labels.end()) {
        missing.push_back(CellName(s, r));
        continue;
      }
      ++row[CategoryIndex(it->second)];
    }
    m.counts.push_back(std::move(row));
    m.subjects.push_back(s);
  }
  if (!missing.empty()) {
    std::string message = "incomplete ratings; missing " + std::to_string(missing.size()) + " cell(s):";
    for (const auto& cell : missing) message += " " + cell;
    throw IncompleteRatingsError(message);
  }
  if (m.counts.empty()) throw RatingsFormatError("no subjects selected");
  return m;
}

double FleissKappa(const AgreementMatrix& matrix) {
  const std::int64_t n = matrix.raters;
  const auto N = static_cast<std::int64_t>(matrix.counts.size());
  if (N < 1) throw RatingsFormatError("agreement matrix has no subjects");
  if (n < 2) throw RatingsFormatError("agreement needs at least two raters per subject");
  const std::size_t k = matrix.counts.front().size();
  if (k < 1) throw RatingsFormatError("agreement matrix has no categories");
  if (N > (std::int64_t{1} << 31) / n) throw RatingsFormatError("agreement matrix is too large");

  std::vector<Int> totals(k, 0);
  Int s = 0;  // sum over cells of n_ij (n_ij - 1)
  for (std::size_t i = 0; i < matrix.counts.size(); ++i) {
    const auto& row = matrix.counts[i];
    if (row.size() != k) throw RatingsFormatError("agreement matrix rows differ in width");
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (row[j] < 0) throw RatingsFormatError("agreement matrix has a negative count");
      sum += row[j];
      s += Int(row[j]) * (row[j] - 1);
      totals[j] += row[j];
    }
    if (sum != n) {
      throw RatingsFormatError("row " + std::to_string(i) + " sums to " + std::to_string(sum) +
                               ", expected " + std::to_string(n));
    }
  }
  Int q = 0;  // sum of squared category totals
  for (Int t : totals) q += t * t;
  const Int m = Int(N) * n;
  const Int pairs = m * (n - 1);
  // kappa = (s / pairs - q / m^2) / (1 - q / m^2), cleared of denominators.
  const Int num = s * m * m - q * pairs;
  const Int den = pairs * (m * m - q);
  if (den == 0) {
    throw DegenerateAgreementError("chance agreement is 1 (every rating falls in one category); kappa is undefined");
  }
  if (num == den) return 1.0;
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

std::map<Attribute, KappaEntry> PerAttributeAgreement(const RatingsTable& table) {
  std::map<Attribute, KappaEntry> out;
  for (const Subject& s : table.subjects) out.emplace(s.attribute, KappaEntry{});
  for (auto& [attribute, entry] : out) {
    try {
      entry.kappa = FleissKappa(BuildMatrix(table, attribute));
    } catch (const DegenerateAgreementError& e) {
      entry.reason = e.what();
    }
  }
  return out;
}

double AverageKappa(const std::map<Attribute, KappaEntry>& per_attribute) {
  double sum = 0;
  std::size_t count = 0;
  for (const auto& [attribute, entry] : per_attribute) {
    if (!entry.kappa) continue;
    sum += *entry.kappa;
    ++count;
  }
  if (count == 0) throw DegenerateAgreementError("no attribute has a defined kappa");
  return sum / static_cast<double>(count);
}

}  // namespace agentaudit
