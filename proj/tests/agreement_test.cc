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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "agentaudit/errors.h"
#include "kappa_oracle.h"
#include "test_util.h"

namespace agentaudit {
namespace {

using testing::Counts;

AgreementMatrix Matrix(Counts counts, std::int64_t raters) {
  AgreementMatrix m;
  m.counts = std::move(counts);
  m.raters = raters;
  return m;
}

// Random N x k matrix with n raters per row.
Counts RandomCounts(std::mt19937_64& rng, int subjects, int raters, int categories) {
  std::uniform_int_distribution<int> pick(0, categories - 1);
  Counts counts(subjects, std::vector<std::int64_t>(categories, 0));
  for (auto& row : counts)
    for (int r = 0; r < raters; ++r) ++row[pick(rng)];
  return counts;
}

TEST(FleissKappaTest, HandDerivedCase) {
  EXPECT_NEAR(FleissKappa(Matrix({{3, 0, 0}, {1, 2, 0}}, 3)), 0.25, 1e-12);
}

TEST(FleissKappaTest, UnanimityIsExactlyOne) {
  EXPECT_EQ(FleissKappa(Matrix({{3, 0}, {0, 3}}, 3)), 1.0);
  EXPECT_EQ(FleissKappa(Matrix({{0, 5, 0, 0}, {5, 0, 0, 0}, {0, 0, 0, 5}, {0, 5, 0, 0}}, 5)), 1.0);
}

TEST(FleissKappaTest, SingleCategoryIsDegenerate) {
  EXPECT_THROW(FleissKappa(Matrix({{4, 0, 0}, {4, 0, 0}}, 4)), DegenerateAgreementError);
  EXPECT_THROW(FleissKappa(Matrix({{2}}, 2)), DegenerateAgreementError);
}

TEST(FleissKappaTest, InvalidMatricesAreRejected) {
  EXPECT_THROW(FleissKappa(Matrix({}, 3)), RatingsFormatError);
  EXPECT_THROW(FleissKappa(Matrix({{1, 0}}, 1)), RatingsFormatError);
  EXPECT_THROW(FleissKappa(Matrix({{2, 0}, {1, 0}}, 2)), RatingsFormatError);
  EXPECT_THROW(FleissKappa(Matrix({{3, -1}}, 2)), RatingsFormatError);
  EXPECT_THROW(FleissKappa(Matrix({{2, 0}, {1, 1, 0}}, 2)), RatingsFormatError);
}

TEST(FleissKappaTest, MaximalDisagreementIsNegative) {
  // Two raters always split: observed agreement 0, chance agreement 1/2.
  EXPECT_NEAR(FleissKappa(Matrix({{1, 1}, {1, 1}}, 2)), -1.0, 1e-12);
}

TEST(FleissKappaTest, MatchesBruteForceOracleOnSmallMatrices) {
  std::mt19937_64 rng(20260419);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int N = std::uniform_int_distribution<int>(1, 6)(rng);
    const int n = std::uniform_int_distribution<int>(2, 4)(rng);
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const Counts counts = RandomCounts(rng, N, n, k);
    const auto expected = testing::BruteForceKappa(counts, n);
    if (!expected) {
      EXPECT_THROW(FleissKappa(Matrix(counts, n)), DegenerateAgreementError);
      continue;
    }
    EXPECT_NEAR(FleissKappa(Matrix(counts, n)), *expected, 1e-9) << "trial " << trial;
    ++compared;
  }
  // About a quarter of the draws use one category and are degenerate.
  EXPECT_GT(compared, 300);
}

TEST(FleissKappaTest, MatchesExactRationalsOnLargerMatrices) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int N = std::uniform_int_distribution<int>(1, 40)(rng);
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const Counts counts = RandomCounts(rng, N, n, 4);
    const auto exact = testing::ExactKappa(counts, n);
    if (!exact) continue;
    const double expected = boost::rational_cast<double>(*exact);
    EXPECT_NEAR(FleissKappa(Matrix(counts, n)), expected, 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(FleissKappaTest, RangeAndPermutationInvariance) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int N = std::uniform_int_distribution<int>(1, 12)(rng);
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    Counts counts = RandomCounts(rng, N, n, 4);
    double kappa = 0;
    try {
      kappa = FleissKappa(Matrix(counts, n));
    } catch (const DegenerateAgreementError&) {
      continue;
    }
    EXPECT_GE(kappa, -1.0);
    EXPECT_LE(kappa, 1.0);

    std::shuffle(counts.begin(), counts.end(), rng);
    std::vector<int> relabel(4);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    Counts permuted = counts;
    for (std::size_t i = 0; i < counts.size(); ++i)
      for (int j = 0; j < 4; ++j) permuted[i][relabel[j]] = counts[i][j];
    EXPECT_EQ(FleissKappa(Matrix(permuted, n)), kappa);
  }
}

TEST(FleissKappaTest, ChanceLevelAgreementIsNearZero) {
  std::mt19937_64 rng(4);
  const double kappa = FleissKappa(Matrix(RandomCounts(rng, 200, 3, 3), 3));
  EXPECT_LT(std::abs(kappa), 0.1);
}

constexpr char kTwoRaters[] =
    "subject,attribute,rater,level\n"
    "r1,actions,alice,higher\n"
    "r1,actions,bob,higher\n"
    "r2,actions,alice,lower\n"
    "r2,actions,bob,lower\n";

TEST(ParseRatingsTest, BasicTable) {
  const RatingsTable t = ParseRatings(kTwoRaters);
  EXPECT_EQ(t.raters, (std::vector<std::string>{"alice", "bob"}));
  ASSERT_EQ(t.subjects.size(), 2u);
  EXPECT_EQ(t.subjects[0].repo, "r1");
  EXPECT_EQ(t.labels.at({t.subjects[1], "bob"}), Rating(Level::kLower));
}

TEST(ParseRatingsTest, DelimitersQuotesAndCase) {
  const RatingsTable t = ParseRatings(
      "\xEF\xBB\xBFLevel;Rater;Subject;Attribute\n"
      "# comment line\n"
      "\n"
      "HIGHER;alice;\"repo;one\";Human-In-The-Loop\n"
      "unknown;bob;\"repo;one\";hitl\n");
  ASSERT_EQ(t.subjects.size(), 1u);
  EXPECT_EQ(t.subjects[0].repo, "repo;one");
  EXPECT_EQ(t.subjects[0].attribute, Attribute::kHumanInTheLoop);
  EXPECT_EQ(t.labels.at({t.subjects[0], "alice"}), Rating(Level::kHigher));
  EXPECT_EQ(t.labels.at({t.subjects[0], "bob"}), Rating());

  const RatingsTable tabs = ParseRatings("subject\tattribute\trater\tlevel\nr\tactions\ta\tmiddle\n");
  EXPECT_EQ(tabs.labels.size(), 1u);
}

TEST(ParseRatingsTest, ErrorsNameTheLine) {
  auto message = [](const std::string& text) {
    try {
      ParseRatings(text);
    } catch (const RatingsFormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("subject,attribute,rater\nr,actions,a\n").find("level"), std::string::npos);
  EXPECT_NE(message("subject,attribute,rater,level\nr,actions,a,high\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("subject,attribute,rater,level\nr,autonomy,a,lower\n").find("autonomy"),
            std::string::npos);
  EXPECT_NE(message("subject,attribute,rater,level\nr,actions,a\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("subject,attribute,rater,level\nr,actions,a,lower\nr,actions,a,higher\n").find("duplicate"),
            std::string::npos);
  EXPECT_EQ(message(""), "ratings file is empty");
  EXPECT_THROW(ReadRatingsFile("/nonexistent/ratings.csv"), RatingsFormatError);
}

TEST(BuildMatrixTest, CountsPerCategory) {
  const AgreementMatrix m = BuildMatrix(ParseRatings(
      "subject,attribute,rater,level\n"
      "r1,actions,a,higher\nr1,actions,b,higher\nr1,actions,c,middle\n"
      "r2,actions,a,unknown\nr2,actions,b,lower\nr2,actions,c,unknown\n"));
  EXPECT_EQ(m.raters, 3);
  EXPECT_EQ(m.counts, (Counts{{0, 1, 2, 0}, {1, 0, 0, 2}}));
}

TEST(BuildMatrixTest, MissingCellsAreListed) {
  const RatingsTable t = ParseRatings(
      "subject,attribute,rater,level\n"
      "r1,actions,a,higher\nr1,actions,b,higher\n"
      "r2,actions,a,lower\n");
  try {
    BuildMatrix(t);
    FAIL() << "expected IncompleteRatingsError";
  } catch (const IncompleteRatingsError& e) {
    EXPECT_NE(std::string(e.what()).find("(r2, actions, b)"), std::string::npos) << e.what();
  }
}

TEST(BuildMatrixTest, AttributeFilter) {
  const RatingsTable t = ParseRatings(
      "subject,attribute,rater,level\n"
      "r1,actions,a,higher\nr1,actions,b,higher\n"
      "r1,environment,a,lower\nr1,environment,b,middle\n");
  const AgreementMatrix m = BuildMatrix(t, Attribute::kEnvironment);
  EXPECT_EQ(m.counts, (Counts{{1, 1, 0, 0}}));
  EXPECT_THROW(BuildMatrix(t, Attribute::kObservability), RatingsFormatError);
}

TEST(PerAttributeAgreementTest, PerfectOrchestrationOnly) {
  std::string csv = "subject,attribute,rater,level\n";
  const char* levels[] = {"lower", "middle", "higher"};
  for (int repo = 0; repo < 6; ++repo) {
    for (Attribute a : kAllAttributes) {
      for (int rater = 0; rater < 3; ++rater) {
        const int level = a == Attribute::kOrchestration ? repo % 3 : (repo + rater) % 3;
        csv += "repo" + std::to_string(repo) + "," + std::string(AttributeName(a)) + ",rater" +
               std::to_string(rater) + "," + levels[level] + "\n";
      }
    }
  }
  const auto per = PerAttributeAgreement(ParseRatings(csv));
  ASSERT_EQ(per.size(), 5u);
  for (const auto& [attribute, entry] : per) {
    ASSERT_TRUE(entry.kappa) << AttributeName(attribute);
    if (attribute == Attribute::kOrchestration) {
      EXPECT_EQ(*entry.kappa, 1.0);
    } else {
      EXPECT_LT(*entry.kappa, 1.0);
    }
  }
}

TEST(PerAttributeAgreementTest, OneAttributeMatchesPooled) {
  const RatingsTable t = ParseRatings(
      "subject,attribute,rater,level\n"
      "r1,actions,a,higher\nr1,actions,b,middle\nr1,actions,c,higher\n"
      "r2,actions,a,lower\nr2,actions,b,lower\nr2,actions,c,lower\n");
  const auto per = PerAttributeAgreement(t);
  ASSERT_EQ(per.size(), 1u);
  EXPECT_EQ(*per.at(Attribute::kActions).kappa, FleissKappa(BuildMatrix(t)));
  EXPECT_EQ(AverageKappa(per), FleissKappa(BuildMatrix(t)));
}

TEST(PerAttributeAgreementTest, DegenerateAttributesAreReportedNotDropped) {
  const auto per = PerAttributeAgreement(ParseRatings(
      "subject,attribute,rater,level\n"
      "r1,actions,a,higher\nr1,actions,b,higher\n"
      "r1,observability,a,lower\nr1,observability,b,higher\n"));
  ASSERT_EQ(per.size(), 2u);
  EXPECT_FALSE(per.at(Attribute::kActions).kappa);
  EXPECT_FALSE(per.at(Attribute::kActions).reason.empty());
  EXPECT_TRUE(per.at(Attribute::kObservability).kappa);
  EXPECT_EQ(AverageKappa(per), *per.at(Attribute::kObservability).kappa);
  EXPECT_THROW(AverageKappa({{Attribute::kActions, KappaEntry{}}}), DegenerateAgreementError);
}

}  // namespace
}  // namespace agentaudit
