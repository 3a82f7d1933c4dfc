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


#include "agentaudit/tokenizer.h"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace agentaudit {
namespace {

std::vector<std::string> Texts(const TokenStream& ts) {
  std::vector<std::string> out;
  for (const Token& t : ts.tokens) {
    if (t.kind != TokenKind::kNewline) out.emplace_back(t.text);
  }
  return out;
}

TEST(TokenizerTest, SplitsNamesOperatorsAndBrackets) {
  const TokenStream ts = Tokenize("f(a=1, b=[x.y])\n");
  EXPECT_EQ(Texts(ts), (std::vector<std::string>{"f", "(", "a", "=", "1", ",", "b", "=", "[",
                                                 "x", ".", "y", "]", ")"}));
  EXPECT_TRUE(ts.warnings.empty());
  EXPECT_EQ(ts.match[1], 13u);
  EXPECT_EQ(ts.match[8], 12u);
}

TEST(TokenizerTest, StringsKeepPrefixesAndTripleQuotes) {
  const TokenStream ts = Tokenize("x = rb'a\\'b' + \"\"\"multi\nline\"\"\" + f\"{v}\"\n");
  const auto texts = Texts(ts);
  ASSERT_EQ(texts.size(), 7u);
  EXPECT_EQ(texts[2], "rb'a\\'b'");
  EXPECT_EQ(texts[4], "\"\"\"multi\nline\"\"\"");
  EXPECT_EQ(texts[6], "f\"{v}\"");
}

TEST(TokenizerTest, CommentsAreDropped) {
  const TokenStream ts = Tokenize("a = 1  # use_docker=False (\nb = 2\n");
  EXPECT_EQ(Texts(ts), (std::vector<std::string>{"a", "=", "1", "b", "=", "2"}));
  EXPECT_TRUE(ts.warnings.empty());
}

TEST(TokenizerTest, LineStartsAndLogicalLines) {
  const TokenStream ts = Tokenize("f(a,\n  b)\nx = 1; y = 2\nz = 3 \\\n  + 4\n");
  std::vector<std::string> starts;
  for (const Token& t : ts.tokens) {
    if (t.line_start) starts.emplace_back(t.text);
  }
  EXPECT_EQ(starts, (std::vector<std::string>{"f", "x", "y", "z"}));
}

TEST(TokenizerTest, PositionsAreOneBasedCodePoints) {
  const TokenStream ts = Tokenize("s = \"\xC3\xA9\xC3\xA9\"; t = 1\n");
  const Token& t = ts.tokens[4];
  ASSERT_EQ(t.text, "t");
  EXPECT_EQ(t.line, 1);
  EXPECT_EQ(t.column, 11);
  EXPECT_EQ(ts.tokens[0].column, 1);
}

TEST(TokenizerTest, UnbalancedBracketsWarnAndRecover) {
  const TokenStream ts = Tokenize("f(a, [b)\ng(c)\n");
  EXPECT_FALSE(ts.warnings.empty());
  // The call parenthesis still closes; the stray '[' does not.
  EXPECT_EQ(ts.match[1], 6u);
  EXPECT_EQ(ts.match[4], TokenStream::kNoMatch);
  std::size_t g = 0;
  while (ts.tokens[g].text != "g") ++g;
  EXPECT_NE(ts.match[g + 1], TokenStream::kNoMatch);
}

TEST(TokenizerTest, StrayCloseWarns) {
  const TokenStream ts = Tokenize("a = 1)\n");
  ASSERT_EQ(ts.warnings.size(), 1u);
  EXPECT_EQ(ts.warnings[0].line, 1);
}

TEST(TokenizerTest, UnterminatedStringWarns) {
  const TokenStream ts = Tokenize("x = 'abc\ny = 2\n");
  EXPECT_FALSE(ts.warnings.empty());
}

TEST(Utf8Test, AcceptsValidAndRejectsInvalid) {
  EXPECT_TRUE(IsValidUtf8(""));
  EXPECT_TRUE(IsValidUtf8("plain ascii"));
  EXPECT_TRUE(IsValidUtf8("\xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80"));
  EXPECT_FALSE(IsValidUtf8("\xFF"));
  EXPECT_FALSE(IsValidUtf8("\xC3"));
  EXPECT_FALSE(IsValidUtf8("\xE2\x82"));
  EXPECT_FALSE(IsValidUtf8("\xC0\xAF"));        // overlong
  EXPECT_FALSE(IsValidUtf8("\xED\xA0\x80"));    // surrogate
  EXPECT_FALSE(IsValidUtf8("\xF4\x90\x80\x80")); // above U+10FFFF
}

TEST(DecodeStringLiteralTest, HandlesEscapesAndRawStrings) {
  EXPECT_EQ(DecodeStringLiteral("'a\\nb'"), "a\nb");
  EXPECT_EQ(DecodeStringLiteral("r'a\\nb'"), "a\\nb");
  EXPECT_EQ(DecodeStringLiteral("\"\\x41\\u00e9\\101\""), "A\xC3\xA9" "A");
  EXPECT_EQ(DecodeStringLiteral("'''x'y'''"), "x'y");
  bool fstring = false;
  EXPECT_EQ(DecodeStringLiteral("F'plain'", &fstring), "plain");
  EXPECT_TRUE(fstring);
}

}  // namespace
}  // namespace agentaudit
