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

#include <array>
#include <cctype>
#include <string>

namespace agentaudit {
namespace {

bool IsNameStart(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool IsNameChar(unsigned char c) { return std::isalnum(c) || c == '_' || c >= 0x80; }

bool IsStringPrefix(std::string_view word) {
  if (word.empty() || word.size() > 2) return false;
  std::string lower;
  for (char c : word) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static constexpr std::array<std::string_view, 9> kPrefixes = {"r", "u", "b", "f", "br",
                                                                "rb", "fr", "rf", "t"};
  for (auto p : kPrefixes) {
    if (lower == p) return true;
  }
  return false;
}

char ClosingFor(char open) {
  switch (open) {
    case '(':
      return ')';
    case '[':
      return ']';
    default:
      return '}';
  }
}

constexpr std::array<std::string_view, 25> kMultiOps = {
    "**=", "//=", ">>=", "<<=", "...", "**", "//", "==", "!=", "<=", ">=", ":=", "->",
    "+=",  "-=",  "*=",  "/=",  "%=",  "&=", "|=", "^=", "@=", "<<", ">>", "<>"};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  TokenStream Run() {
    bool at_line_start = true;
    while (pos_ < src_.size()) {
      const unsigned char c = static_cast<unsigned char>(src_[pos_]);
      if (c == '\n' || c == '\r') {
        EndPhysicalLine();
        at_line_start = true;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\f') {
        Advance(1);
        continue;
      }
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') Advance(1);
        continue;
      }
      if (c == '\\' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == '\n' || src_[pos_ + 1] == '\r')) {
        Advance(1);
        ConsumeLineBreak();
        continue;
      }
      const bool starts_line = at_line_start && stack_.empty();
      at_line_start = false;
      if (starts_line || after_semicolon_) {
        if (starts_line) line_indent_ = column_;
        pending_line_start_ = true;
        after_semicolon_ = false;
      }
      LexToken();
    }
    if (!out_.tokens.empty() && out_.tokens.back().kind != TokenKind::kNewline) {
      Emit(TokenKind::kNewline, src_.size(), 0, line_, column_);
    }
    for (const auto& open : stack_) {
      const Token& t = out_.tokens[open];
      Warn(t.line, t.column, std::string("unclosed '") + std::string(t.text) + "'");
    }
    out_.match.resize(out_.tokens.size(), TokenStream::kNoMatch);
    return std::move(out_);
  }

 private:
  void Advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      const unsigned char c = static_cast<unsigned char>(src_[pos_]);
      if ((c & 0xC0) != 0x80) ++column_;
      ++pos_;
    }
  }

  void ConsumeLineBreak() {
    if (pos_ < src_.size() && src_[pos_] == '\r') ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '\n') ++pos_;
    ++line_;
    column_ = 1;
  }

  void EndPhysicalLine() {
    if (stack_.empty() && !out_.tokens.empty() && out_.tokens.back().kind != TokenKind::kNewline) {
      Emit(TokenKind::kNewline, pos_, 0, line_, column_);
    }
    ConsumeLineBreak();
  }

  void Warn(int line, int column, std::string message) {
    out_.warnings.push_back({line, column, std::move(message)});
  }

  void Emit(TokenKind kind, std::size_t begin, std::size_t length, int line, int column) {
    Token t;
    t.kind = kind;
    t.text = src_.substr(begin, length);
    t.offset = begin;
    t.line = line;
    t.column = column;
    t.indent = line_indent_;
    t.line_start = pending_line_start_ && kind != TokenKind::kNewline;
    if (t.line_start) pending_line_start_ = false;
    out_.tokens.push_back(t);
    out_.match.push_back(TokenStream::kNoMatch);
  }

  void LexToken() {
    const std::size_t begin = pos_;
    const int line = line_;
    const int column = column_;
    const unsigned char c = static_cast<unsigned char>(src_[pos_]);

    if (IsNameStart(c)) {
      std::size_t end = pos_;
      while (end < src_.size() && IsNameChar(static_cast<unsigned char>(src_[end]))) ++end;
      const std::string_view word = src_.substr(pos_, end - pos_);
      if (end < src_.size() && (src_[end] == '"' || src_[end] == '\'') && IsStringPrefix(word)) {
        Advance(word.size());
        LexString(begin, line, column);
        return;
      }
      Advance(word.size());
      Emit(TokenKind::kName, begin, pos_ - begin, line, column);
      return;
    }
    if (c == '"' || c == '\'') {
      LexString(begin, line, column);
      return;
    }
    if (std::isdigit(c) || (c == '.' && pos_ + 1 < src_.size() &&
                            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      while (pos_ < src_.size()) {
        const unsigned char d = static_cast<unsigned char>(src_[pos_]);
        if ((d == 'e' || d == 'E') && pos_ + 1 < src_.size() &&
            (src_[pos_ + 1] == '+' || src_[pos_ + 1] == '-') &&
            !(pos_ > begin + 1 && (src_[begin + 1] == 'x' || src_[begin + 1] == 'X'))) {
          Advance(2);
          continue;
        }
        if (!(std::isalnum(d) || d == '_' || d == '.')) break;
        Advance(1);
      }
      Emit(TokenKind::kNumber, begin, pos_ - begin, line, column);
      return;
    }
    if (c == '(' || c == '[' || c == '{') {
      Advance(1);
      stack_.push_back(out_.tokens.size());
      Emit(TokenKind::kOpen, begin, 1, line, column);
      return;
    }
    if (c == ')' || c == ']' || c == '}') {
      Advance(1);
      const std::size_t index = out_.tokens.size();
      Emit(TokenKind::kClose, begin, 1, line, column);
      CloseBracket(index, static_cast<char>(c));
      return;
    }
    for (auto op : kMultiOps) {
      if (src_.substr(pos_, op.size()) == op) {
        Advance(op.size());
        Emit(TokenKind::kOp, begin, op.size(), line, column);
        return;
      }
    }
    Advance(1);
    Emit(TokenKind::kOp, begin, pos_ - begin, line, column);
    if (c == ';' && stack_.empty()) after_semicolon_ = true;
  }

  void CloseBracket(std::size_t index, char close) {
    std::size_t depth = stack_.size();
    while (depth > 0 && ClosingFor(out_.tokens[stack_[depth - 1]].text[0]) != close) --depth;
    const Token& t = out_.tokens[index];
    if (depth == 0) {
      Warn(t.line, t.column, std::string("unmatched '") + close + "'");
      return;
    }
    while (stack_.size() > depth) {
      const Token& open = out_.tokens[stack_.back()];
      Warn(open.line, open.column, std::string("unclosed '") + std::string(open.text) + "'");
      stack_.pop_back();
    }
    out_.match[stack_.back()] = index;
    stack_.pop_back();
  }

  // pos_ is on the opening quote; the token starts at `begin` (prefix).
  void LexString(std::size_t begin, int line, int column) {
    const char quote = src_[pos_];
    const bool triple = src_.substr(pos_, 3) == std::string(3, quote);
    Advance(triple ? 3 : 1);
    while (true) {
      if (pos_ >= src_.size()) {
        Warn(line, column, "unterminated string literal");
        break;
      }
      const char c = src_[pos_];
      if (c == '\\') {
        Advance(1);
        if (pos_ < src_.size() && (src_[pos_] == '\n' || src_[pos_] == '\r')) {
          ConsumeLineBreak();
        } else {
          Advance(1);
        }
        continue;
      }
      if (c == '\n' || c == '\r') {
        if (!triple) {
          Warn(line, column, "unterminated string literal");
          break;
        }
        ConsumeLineBreak();
        continue;
      }
      if (c == quote) {
        if (!triple) {
          Advance(1);
          break;
        }
        if (src_.substr(pos_, 3) == std::string(3, quote)) {
          Advance(3);
          break;
        }
      }
      Advance(1);
    }
    Emit(TokenKind::kString, begin, pos_ - begin, line, column);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int line_indent_ = 1;
  bool pending_line_start_ = false;
  bool after_semicolon_ = false;
  std::vector<std::size_t> stack_;
  TokenStream out_;
};

void AppendUtf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool ReadHex(std::string_view s, std::size_t& i, std::size_t digits, std::uint32_t& cp) {
  if (i + digits > s.size()) return false;
  cp = 0;
  for (std::size_t k = 0; k < digits; ++k) {
    const char h = s[i + k];
    if (!std::isxdigit(static_cast<unsigned char>(h))) return false;
    cp = cp * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(h))
                                                   ? h - '0'
                                                   : std::tolower(h) - 'a' + 10);
  }
  i += digits;
  return true;
}

}  // namespace

TokenStream Tokenize(std::string_view source) { return Lexer(source).Run(); }

bool IsValidUtf8(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    const unsigned char c = static_cast<unsigned char>(bytes[i]);
    std::size_t n;
    std::uint32_t cp;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      n = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      n = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      n = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + n >= bytes.size()) return false;
    for (std::size_t k = 1; k <= n; ++k) {
      const unsigned char d = static_cast<unsigned char>(bytes[i + k]);
      if ((d & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (d & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[n] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += n + 1;
  }
  return true;
}

std::string DecodeStringLiteral(std::string_view token, bool* is_fstring) {
  std::size_t i = 0;
  bool raw = false;
  bool fstring = false;
  while (i < token.size() && token[i] != '"' && token[i] != '\'') {
    const char p = static_cast<char>(std::tolower(static_cast<unsigned char>(token[i])));
    raw |= p == 'r';
    fstring |= p == 'f';
    ++i;
  }
  if (is_fstring) *is_fstring = fstring;
  if (i >= token.size()) return {};
  const char quote = token[i];
  const bool triple = token.substr(i, 3) == std::string(3, quote);
  const std::size_t qlen = triple ? 3 : 1;
  std::size_t begin = i + qlen;
  std::size_t end = token.size();
  if (end >= begin + qlen && token.substr(end - qlen, qlen) == std::string(qlen, quote)) {
    end -= qlen;
  }
  if (end < begin) end = begin;
  const std::string_view body = token.substr(begin, end - begin);
  if (raw) return std::string(body);

  std::string out;
  out.reserve(body.size());
  for (std::size_t k = 0; k < body.size();) {
    const char c = body[k];
    if (c != '\\' || k + 1 >= body.size()) {
      out.push_back(c);
      ++k;
      continue;
    }
    const char e = body[k + 1];
    k += 2;
    std::uint32_t cp = 0;
    switch (e) {
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'r': out.push_back('\r'); break;
      case 'a': out.push_back('\a'); break;
      case 'b': out.push_back('\b'); break;
      case 'f': out.push_back('\f'); break;
      case 'v': out.push_back('\v'); break;
      case '\\': out.push_back('\\'); break;
      case '\'': out.push_back('\''); break;
      case '"': out.push_back('"'); break;
      case '\n': break;
      case '\r':
        if (k < body.size() && body[k] == '\n') ++k;
        break;
      case 'x':
        if (ReadHex(body, k, 2, cp)) AppendUtf8(out, cp);
        else out += "\\x";
        break;
      case 'u':
        if (ReadHex(body, k, 4, cp)) AppendUtf8(out, cp);
        else out += "\\u";
        break;
      case 'U':
        if (ReadHex(body, k, 8, cp) && cp <= 0x10FFFF) AppendUtf8(out, cp);
        else out += "\\U";
        break;
      default:
        if (e >= '0' && e <= '7') {
          cp = static_cast<std::uint32_t>(e - '0');
          for (int d = 0; d < 2 && k < body.size() && body[k] >= '0' && body[k] <= '7'; ++d, ++k) {
            cp = cp * 8 + static_cast<std::uint32_t>(body[k] - '0');
          }
          AppendUtf8(out, cp);
        } else {
          out.push_back('\\');
          out.push_back(e);
        }
    }
  }
  return out;
}

}  // namespace agentaudit
