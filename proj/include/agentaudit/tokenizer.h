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

#ifndef AGENTAUDIT_TOKENIZER_H_
#define AGENTAUDIT_TOKENIZER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace agentaudit {

// Tokens of Python-syntax source. Comments and non-logical line breaks are
// dropped; a kNewline token ends each logical line.
enum class TokenKind {
  kName,
  kNumber,
  kString,
  kOp,
  kOpen,   // ( [ {
  kClose,  // ) ] }
  kNewline,
};

struct Token {
  TokenKind kind;
  std::string_view text;   // view into the tokenized source
  std::size_t offset = 0;  // byte offset of text.front()
  int line = 1;            // 1-based
  int column = 1;          // 1-based, in code points
  // Column of the first token on this token's logical line; used to track
  // def/class nesting.
  int indent = 0;
  bool line_start = false;

  std::size_t end() const { return offset + text.size(); }
  bool Is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

struct TokenizeWarning {
  int line;
  int column;
  std::string message;
};

struct TokenStream {
  std::vector<Token> tokens;
  std::vector<TokenizeWarning> warnings;
  // For every kOpen token, the index of its matching kClose; kNoMatch for an
  // unbalanced bracket. Entries for other tokens are kNoMatch.
  std::vector<std::size_t> match;

  static constexpr std::size_t kNoMatch = static_cast<std::size_t>(-1);
};

// Never fails: unterminated strings and unbalanced brackets become warnings
// and the tokenizer resynchronizes.
TokenStream Tokenize(std::string_view source);

// True for valid UTF-8 (overlong forms and surrogates rejected).
bool IsValidUtf8(std::string_view bytes);

// Decoded contents of a single string-literal token: prefix and quotes are
// stripped and, unless the literal is raw, the common escapes are processed.
// Sets *is_fstring when the literal carries an f prefix.
std::string DecodeStringLiteral(std::string_view token, bool* is_fstring = nullptr);

}  // namespace agentaudit

#endif  // AGENTAUDIT_TOKENIZER_H_
