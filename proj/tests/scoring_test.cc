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


#include "agentaudit/scoring.h"

#include <gtest/gtest.h>

#include <random>

#include "agentaudit/audit.h"
#include "test_util.h"

namespace agentaudit {
namespace {

const RulePack& Pack() { return AutoGenRulePack(); }

// Scans `source` as app.py and applies framework defaults.
std::vector<FlagSite> Sites(std::string_view source) {
  const FlagMatcher matcher(Pack());
  return InjectDefaults(ScanFile(source, "app.py", matcher).sites, Pack());
}

Rating LevelOf(Attribute a, std::string_view source) {
  const auto sites = Sites(source);
  return ScoreAttribute(a, sites, Pack()).level;
}

FlagSite Site(const FlagKind& kind, NormalizedValue value, int line) {
  FlagSite s;
  s.kind = kind;
  s.value = std::move(value);
  s.location = {"app.py", line, 1, 0};
  s.call_site = s.location;
  return s;
}

TEST(InjectDefaultsTest, AssistantAgentGetsNever) {
  const FlagMatcher matcher(Pack());
  const auto explicit_sites = ScanFile("AssistantAgent(name=\"a\")", "app.py", matcher).sites;
  const auto sites = InjectDefaults(explicit_sites, Pack());
  ASSERT_EQ(sites.size(), 2u);
  EXPECT_EQ(sites[1].kind, kinds::kHumanInputMode);
  EXPECT_EQ(sites[1].value, NormalizedValue(StrVal{"NEVER"}));
  EXPECT_EQ(sites[1].provenance, Provenance::kFrameworkDefault);
  EXPECT_TRUE(sites[1].location.SamePosition(sites[0].location));
}

TEST(InjectDefaultsTest, ExplicitValueStands) {
  const auto sites = Sites("UserProxyAgent(human_input_mode=\"NEVER\")");
  ASSERT_EQ(sites.size(), 2u);
  EXPECT_EQ(sites[1].value, NormalizedValue(StrVal{"NEVER"}));
  EXPECT_EQ(sites[1].provenance, Provenance::kExplicit);
}

TEST(InjectDefaultsTest, EmptyInput) {
  EXPECT_TRUE(InjectDefaults({}, Pack()).empty());
}

TEST(InjectDefaultsTest, DockerDefaultForCodeExecution) {
  auto sites = Sites("UserProxyAgent('u', code_execution_config={'work_dir': 'w'})");
  ASSERT_EQ(sites.size(), 4u);
  EXPECT_EQ(std::count_if(sites.begin(), sites.end(), [](const FlagSite& s) {
              return s.kind == kinds::kUseDocker && s.provenance == Provenance::kFrameworkDefault &&
                     s.value == NormalizedValue(BoolVal{true});
            }),
            1);
  EXPECT_EQ(Sites("UserProxyAgent('u', code_execution_config=False)").size(), 3u);
  EXPECT_EQ(Sites("UserProxyAgent('u', code_execution_config={'use_docker': False})").size(), 4u);
  // Unresolved configurations are assumed to keep the default.
  EXPECT_EQ(Sites("UserProxyAgent('u', code_execution_config=cfg)").size(), 4u);
}

TEST(ScoreEnvironmentTest, ExecutorObjectsDecideTheSandbox) {
  // An explicit executor replaces use_docker, so no default is injected.
  const auto local = Sites(
      "from autogen.coding import LocalCommandLineCodeExecutor\n"
      "UserProxyAgent('u', code_execution_config={'executor': LocalCommandLineCodeExecutor(work_dir='w')})\n");
  EXPECT_EQ(std::count_if(local.begin(), local.end(),
                          [](const FlagSite& s) { return s.provenance == Provenance::kFrameworkDefault &&
                                                         s.kind == kinds::kUseDocker; }),
            0);
  EXPECT_EQ(ScoreEnvironment(local, Pack()).level, Level::kHigher);

  const auto docker = Sites(
      "import autogen.coding as c\n"
      "UserProxyAgent('u', code_execution_config={'executor': c.DockerCommandLineCodeExecutor()})\n");
  EXPECT_EQ(ScoreEnvironment(docker, Pack()).level, Level::kLower);
}

TEST(InjectDefaultsTest, IsIdempotent) {
  const auto once = Sites("UserProxyAgent('u', code_execution_config={})\nAssistantAgent('a')\n");
  EXPECT_EQ(InjectDefaults(once, Pack()), once);
}

TEST(ScoreActionsTest, CellExamples) {
  FlagSite off = Site(kinds::kCodeExecutionConfig, BoolVal{false}, 1);
  EXPECT_EQ(ScoreActions(std::vector{off}, Pack()).level, Level::kLower);

  FlagSite dict = Site(kinds::kCodeExecutionConfig, MakeMapping({{"work_dir", StrVal{"w"}}}), 1);
  EXPECT_EQ(ScoreActions(std::vector{dict}, Pack()).level, Level::kHigher);

  FlagSite msg = Site(kinds::kSystemMessage, StrVal{"You must EXECUTE THE FUNCTION when asked"}, 2);
  EXPECT_EQ(ScoreActions(std::vector{off, msg}, Pack()).level, Level::kMiddle);

  EXPECT_EQ(ScoreActions({}, Pack()).level, std::nullopt);
  FlagSite unresolved = Site(kinds::kCodeExecutionConfig, UnresolvedVal{"cfg"}, 3);
  const auto score = ScoreActions(std::vector{off, unresolved}, Pack());
  EXPECT_EQ(score.level, Level::kHigher);
  EXPECT_TRUE(score.mixed);
  ASSERT_EQ(score.notes.size(), 1u);
  EXPECT_NE(score.notes[0].find("cfg"), std::string::npos);
}

TEST(ScoreEnvironmentTest, CellExamples) {
  FlagSite docker = Site(kinds::kUseDocker, BoolVal{true}, 1);
  FlagSite browser = Site(kinds::kBrowserConfig, MakeMapping({}), 2);
  FlagSite no_docker = Site(kinds::kUseDocker, BoolVal{false}, 3);
  EXPECT_EQ(ScoreEnvironment(std::vector{docker}, Pack()).level, Level::kLower);
  EXPECT_EQ(ScoreEnvironment(std::vector{docker, browser}, Pack()).level, Level::kMiddle);
  EXPECT_EQ(ScoreEnvironment(std::vector{docker, browser, no_docker}, Pack()).level, Level::kHigher);
  EXPECT_EQ(ScoreEnvironment(std::vector{browser}, Pack()).level, std::nullopt);
  EXPECT_EQ(ScoreEnvironment({}, Pack()).level, std::nullopt);
}

TEST(ScoreOrchestrationTest, CellExamples) {
  EXPECT_EQ(LevelOf(Attribute::kOrchestration, "GroupChat(agents=[], max_round=1)"), Level::kLower);
  EXPECT_EQ(LevelOf(Attribute::kOrchestration, "f(max_consecutive_auto_reply=5)"), Level::kMiddle);
  EXPECT_EQ(LevelOf(Attribute::kOrchestration, "GroupChat(agents=[])"), Level::kHigher);
  EXPECT_EQ(LevelOf(Attribute::kOrchestration, "x = 1"), std::nullopt);
}

TEST(ScoreOrchestrationTest, UnresolvedBoundIsMiddleAndMixed) {
  const auto sites = Sites("GroupChat(agents=a, max_round=CONFIG['r'])");
  const AttributeScore score = ScoreOrchestration(sites, Pack());
  EXPECT_EQ(score.level, Level::kMiddle);
  EXPECT_TRUE(score.mixed);
  EXPECT_FALSE(score.notes.empty());
}

TEST(ScoreOrchestrationTest, OneUnboundConstructionDecides) {
  const auto sites = Sites(
      "a = AssistantAgent('a', max_consecutive_auto_reply=1)\n"
      "b = AssistantAgent('b')\n");
  const AttributeScore score = ScoreOrchestration(sites, Pack());
  EXPECT_EQ(score.level, Level::kHigher);
  EXPECT_TRUE(score.mixed);
}

TEST(ScoreHumanInLoopTest, CellExamples) {
  EXPECT_EQ(LevelOf(Attribute::kHumanInTheLoop,
                    "UserProxyAgent('a')\nUserProxyAgent('b', human_input_mode='ALWAYS')"),
            Level::kLower);
  EXPECT_EQ(LevelOf(Attribute::kHumanInTheLoop, "AssistantAgent('a')\nUserProxyAgent('b', human_input_mode='NEVER')"),
            Level::kHigher);
  EXPECT_EQ(LevelOf(Attribute::kHumanInTheLoop, "ConversableAgent('a')"), Level::kMiddle);
}

TEST(ScoreHumanInLoopTest, OneAlwaysThreeNeverIsMixedMiddle) {
  const auto sites = Sites(
      "UserProxyAgent('gate', human_input_mode='ALWAYS')\n"
      "AssistantAgent('a')\nAssistantAgent('b')\nAssistantAgent('c')\n");
  const AttributeScore score = ScoreHumanInLoop(sites, Pack());
  EXPECT_EQ(score.level, Level::kMiddle);
  EXPECT_TRUE(score.mixed);
  EXPECT_EQ(score.evidence.size(), 4u);
}

TEST(ScoreHumanInLoopTest, UnresolvedModesAreExcludedWithNote) {
  const auto sites = Sites("GroupChat(agents=[])\nmode_holder(human_input_mode=os.environ['MODE'])\n");
  const AttributeScore score = ScoreHumanInLoop(sites, Pack());
  EXPECT_EQ(score.level, std::nullopt);
  ASSERT_EQ(score.notes.size(), 1u);
  EXPECT_NE(score.notes[0].find("os.environ['MODE']"), std::string::npos);

  const auto with_never = Sites("AssistantAgent('a')\nf(human_input_mode=mode)\n");
  EXPECT_EQ(ScoreHumanInLoop(with_never, Pack()).level, Level::kHigher);
}

TEST(ScoreObservabilityTest, CellExamples) {
  EXPECT_EQ(LevelOf(Attribute::kObservability, "a = AssistantAgent('a')\ndisplay_messages(a)"), Level::kLower);
  EXPECT_EQ(LevelOf(Attribute::kObservability, "a = AssistantAgent('a')\nautogen.runtime_logging.start()"),
            Level::kMiddle);
  EXPECT_EQ(LevelOf(Attribute::kObservability, "a = AssistantAgent('a')"), Level::kHigher);
  EXPECT_EQ(LevelOf(Attribute::kObservability, "x = 1"), std::nullopt);
}

TEST(ScoreObservabilityTest, LoggingOutranksDisplay) {
  const auto sites = Sites(
      "a = AssistantAgent('a')\n"
      "a.register_reply([A], reply_func=show)\n"
      "logging.getLogger('x')\n");
  const AttributeScore score = ScoreObservability(sites, Pack());
  EXPECT_EQ(score.level, Level::kMiddle);
  EXPECT_TRUE(score.mixed);
}

TEST(AggregateScorecardTest, SingleUserProxyFile) {
  testing::TempDir dir;
  testing::WriteText(dir / "app.py", "UserProxyAgent(code_execution_config=False)\n");
  RepoRef repo{dir.path().string(), std::nullopt, "one-file", std::nullopt};
  const AuditResult r = AuditTree(dir.path(), repo, Pack(), FilterRules::ForPack(Pack()), false);
  const auto& s = r.card.scores;
  EXPECT_EQ(s.at(Attribute::kActions).level, Level::kLower);
  EXPECT_EQ(s.at(Attribute::kHumanInTheLoop).level, Level::kLower);
  EXPECT_EQ(s.at(Attribute::kEnvironment).level, std::nullopt);
  EXPECT_EQ(s.at(Attribute::kOrchestration).level, Level::kHigher);
  EXPECT_EQ(s.at(Attribute::kObservability).level, Level::kHigher);
  EXPECT_EQ(r.card.rulepack_id, "autogen@1.0.0");
  EXPECT_EQ(r.card.manifest_hash, r.manifest.Hash());
  EXPECT_TRUE(r.card.warnings.empty());
}

TEST(AggregateScorecardTest, EmptyRepositoryIsAllUnknownWithWarning) {
  testing::TempDir dir;
  RepoRef repo{dir.path().string(), std::nullopt, "empty", std::nullopt};
  const AuditResult r = AuditTree(dir.path(), repo, Pack(), FilterRules::ForPack(Pack()), false);
  ASSERT_EQ(r.card.scores.size(), 5u);
  for (const auto& [a, score] : r.card.scores) EXPECT_EQ(score.level, std::nullopt);
  EXPECT_FALSE(r.card.warnings.empty());
}

// Random multisets over every kind and a handful of values.
std::vector<FlagSite> RandomSites(std::mt19937& rng, int count) {
  static const std::vector<FlagKind> kKinds = {
      kinds::kCodeExecutionConfig, kinds::kUseDocker,        kinds::kBrowserConfig,
      kinds::kMaxRounds,           kinds::kMaxConsecutiveAutoReply, kinds::kHumanInputMode,
      kinds::kSystemMessage,       kinds::kLoggingInvocation, kinds::kDisplayConfig,
      kinds::kAgentConstruction,   kinds::kGroupChatConstruction};
  static const std::vector<NormalizedValue> kValues = {
      BoolVal{false}, BoolVal{true}, IntVal{0}, IntVal{1}, IntVal{7}, StrVal{"ALWAYS"},
      StrVal{"NEVER"}, StrVal{"TERMINATE"}, StrVal{"please execute the function"},
      MakeMapping({{"work_dir", StrVal{"w"}}}), UnresolvedVal{"cfg.value"}};
  std::vector<FlagSite> out;
  for (int i = 0; i < count; ++i) {
    FlagSite s = Site(kKinds[rng() % kKinds.size()], kValues[rng() % kValues.size()], 1 + static_cast<int>(rng() % 6));
    if (s.kind == kinds::kAgentConstruction) s.constructor_name = std::vector<std::string>{"AssistantAgent", "UserProxyAgent", "ConversableAgent"}[rng() % 3];
    out.push_back(std::move(s));
  }
  return out;
}

TEST(ScoringPropertyTest, EveryConfigurationGetsExactlyOneRating) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto sites = InjectDefaults(RandomSites(rng, static_cast<int>(rng() % 12)), Pack());
    for (Attribute a : kAllAttributes) {
      const AttributeScore score = ScoreAttribute(a, sites, Pack());
      EXPECT_EQ(score.attribute, a);
      EXPECT_GE(RatingRank(score.level), -1);
      EXPECT_LE(RatingRank(score.level), 2);
      if (score.mixed) EXPECT_GE(score.evidence.size(), 1u);
    }
  }
}

TEST(ScoringPropertyTest, EvidenceComesFromTheInput) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sites = InjectDefaults(RandomSites(rng, 8), Pack());
    for (Attribute a : kAllAttributes) {
      for (const FlagSite& e : ScoreAttribute(a, sites, Pack()).evidence) {
        EXPECT_NE(std::find(sites.begin(), sites.end(), e), sites.end());
      }
    }
  }
}

TEST(ScoringPropertyTest, DefaultsDoNotChangeFullyExplicitHumanInLoop) {
  const std::vector<std::string> modes = {"ALWAYS", "NEVER", "TERMINATE"};
  std::mt19937 rng(3);
  const FlagMatcher matcher(Pack());
  for (int trial = 0; trial < 100; ++trial) {
    std::string source;
    const int agents = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < agents; ++i) {
      source += std::vector<std::string>{"AssistantAgent", "UserProxyAgent", "ConversableAgent"}[rng() % 3] +
                "('a" + std::to_string(i) + "', human_input_mode='" + modes[rng() % 3] + "')\n";
    }
    const auto explicit_sites = ScanFile(source, "app.py", matcher).sites;
    const auto injected = InjectDefaults(explicit_sites, Pack());
    EXPECT_EQ(injected.size(), explicit_sites.size()) << source;
    EXPECT_EQ(ScoreHumanInLoop(explicit_sites, Pack()).level, ScoreHumanInLoop(injected, Pack()).level);
  }
}

}  // namespace
}  // namespace agentaudit
