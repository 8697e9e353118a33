// Copyright 2026 The SmartEmbed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "smartembed/frontend/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>

#include "smartembed/error.hpp"

namespace smartembed::frontend {

std::string_view tokenKindName(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Keyword: return "Keyword";
    case TokenKind::Identifier: return "Identifier";
    case TokenKind::Punctuation: return "Punctuation";
    case TokenKind::Operator: return "Operator";
    case TokenKind::DecimalNumber: return "DecimalNumber";
    case TokenKind::HexNumber: return "HexNumber";
    case TokenKind::StringLiteral: return "StringLiteral";
    case TokenKind::BoolLiteral: return "BoolLiteral";
    case TokenKind::VersionLiteral: return "VersionLiteral";
    case TokenKind::Comment: return "Comment";
    case TokenKind::Pragma: return "Pragma";
  }
  return "Unknown";
}

std::string_view literalPlaceholder(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::DecimalNumber: return "decimalnumber";
    case TokenKind::HexNumber: return "hexnumber";
    case TokenKind::StringLiteral: return "stringliteral";
    case TokenKind::BoolLiteral: return "boolliteral";
    case TokenKind::VersionLiteral: return "versionliteral";
    default: return {};
  }
}

namespace {

constexpr std::array<std::string_view, 66> kKeywords{{
    "abstract", "address", "anonymous", "as", "assembly", "break", "calldata", "catch",
    "constant", "constructor", "continue", "contract", "days", "delete", "do", "else",
    "emit", "enum", "error", "ether", "event", "external", "fallback", "finney",
    "for", "function", "gwei", "hours", "if", "immutable", "import", "indexed",
    "interface", "internal", "is", "library", "mapping", "memory", "minutes", "modifier",
    "new", "override", "payable", "private", "public", "pure", "receive", "return",
    "returns", "revert", "seconds", "storage", "struct", "szabo", "throw", "try",
    "type", "unchecked", "using", "var", "view", "virtual", "weeks", "wei",
    "while", "years",
}};

bool hasSizedSuffix(std::string_view word, std::string_view prefix, int lo, int hi) {
  if (word.size() <= prefix.size() || word.substr(0, prefix.size()) != prefix) return false;
  std::string_view digits = word.substr(prefix.size());
  if (digits.front() == '0') return false;
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc{} && ptr == digits.data() + digits.size() && value >= lo && value <= hi;
}

struct OperatorTable {
  // Longest first so that greedy matching picks `>>=` over `>>` over `>`.
  static constexpr std::array<std::string_view, 41> kOps{{
      ">>>=", "<<=", ">>=", ">>>", "**", "++", "--", "+=", "-=", "*=", "/=", "%=", "|=", "&=", "^=",
      "==",   "!=",  "<=",  ">=",  "&&", "||", "=>", "<<", ">>", ":=", "+",  "-",  "*",  "/",
      "%",    "=",   "<",   ">",   "!",  "~",  "&",  "|",  "^",  "?",  ":",  ".",
  }};
};

bool isIdentStart(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$'; }
bool isIdentPart(unsigned char c) { return std::isalnum(c) || c == '_' || c == '$'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipWhitespace();
      if (atEnd()) break;
      out.push_back(next());
      updatePragmaState(out.back());
    }
    return out;
  }

 private:
  bool atEnd() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    unsigned char c = static_cast<unsigned char>(src_[pos_++]);
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++column_;
    }
    // Continuation bytes of a multi-byte sequence do not move the column.
    while (!atEnd() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80 && (c & 0x80)) {
      ++pos_;
    }
  }

  void skipWhitespace() {
    while (!atEnd()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start, int line, int col) const {
    return Token{std::string(src_.substr(start, pos_ - start)), kind, line, col};
  }

  Token next() {
    const std::size_t start = pos_;
    const int line = line_;
    const int col = column_;
    const char c = peek();

    if (c == '/' && peek(1) == '/') {
      while (!atEnd() && peek() != '\n') advance();
      return make(TokenKind::Comment, start, line, col);
    }
    if (c == '/' && peek(1) == '*') {
      advance();
      advance();
      while (!(peek() == '*' && peek(1) == '/')) {
        if (atEnd()) throw LexError("unterminated block comment", line, col);
        advance();
      }
      advance();
      advance();
      return make(TokenKind::Comment, start, line, col);
    }
    if (c == '"' || c == '\'') return string(start, line, col);
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))) && !inPragma_)) {
      return inPragma_ ? version(start, line, col) : number(start, line, col);
    }
    if (isIdentStart(static_cast<unsigned char>(c))) {
      while (!atEnd() && isIdentPart(static_cast<unsigned char>(peek()))) advance();
      std::string_view word = src_.substr(start, pos_ - start);
      // hex"..." and unicode"..." string forms.
      if ((word == "hex" || word == "unicode") && (peek() == '"' || peek() == '\'')) {
        Token t = string(pos_, line, col);
        t.text = std::string(word) + t.text;
        return t;
      }
      return Token{std::string(word), classifyWord(word), line, col};
    }
    for (std::string_view op : OperatorTable::kOps) {
      if (src_.substr(pos_, op.size()) == op) {
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        return make(op == "." ? TokenKind::Punctuation : TokenKind::Operator, start, line, col);
      }
    }
    switch (c) {
      case ';': case ',': case '{': case '}': case '(': case ')': case '[': case ']':
        advance();
        return make(TokenKind::Punctuation, start, line, col);
      default:
        break;
    }
    throw LexError(std::string("illegal character '") + printable(c) + "'", line, col);
  }

  static std::string printable(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7F) return std::string(1, c);
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("\\x") + kHex[u >> 4] + kHex[u & 0xF];
  }

  TokenKind classifyWord(std::string_view word) const {
    if (word == "pragma") return TokenKind::Pragma;
    if (word == "true" || word == "false") return TokenKind::BoolLiteral;
    if (inPragma_ && word == "solidity") return TokenKind::Keyword;
    if (isSolidityKeyword(word) || isElementaryTypeName(word)) return TokenKind::Keyword;
    return TokenKind::Identifier;
  }

  Token string(std::size_t start, int line, int col) {
    const char quote = peek();
    advance();
    while (true) {
      if (atEnd() || peek() == '\n') throw LexError("unterminated string literal", line, col);
      if (peek() == '\\') {
        advance();
        if (atEnd()) throw LexError("unterminated string literal", line, col);
        advance();
        continue;
      }
      if (peek() == quote) {
        advance();
        break;
      }
      advance();
    }
    return make(TokenKind::StringLiteral, start, line, col);
  }

  Token number(std::size_t start, int line, int col) {
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance();
      advance();
      while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      return make(TokenKind::HexNumber, start, line, col);
    }
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
    };
    digits();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      advance();
      digits();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         (peek(1) == '-' && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      advance();
      if (peek() == '-') advance();
      digits();
    }
    return make(TokenKind::DecimalNumber, start, line, col);
  }

  Token version(std::size_t start, int line, int col) {
    // 0.4.15, 0.5, 0.8.x, 0.4.*
    while (std::isdigit(static_cast<unsigned char>(peek())) ||
           (peek() == '.' && (std::isdigit(static_cast<unsigned char>(peek(1))) || peek(1) == 'x' ||
                              peek(1) == 'X' || peek(1) == '*')) ||
           ((peek() == 'x' || peek() == 'X' || peek() == '*') && pos_ > start &&
            src_[pos_ - 1] == '.')) {
      advance();
    }
    return make(TokenKind::VersionLiteral, start, line, col);
  }

  void updatePragmaState(const Token& t) {
    if (t.kind == TokenKind::Pragma) {
      inPragma_ = true;
    } else if (inPragma_ && t.is(TokenKind::Punctuation, ";")) {
      inPragma_ = false;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  bool inPragma_ = false;
};

}  // namespace

bool isSolidityKeyword(std::string_view word) noexcept {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool isElementaryTypeName(std::string_view word) noexcept {
  if (word == "address" || word == "bool" || word == "string" || word == "byte" ||
      word == "bytes" || word == "int" || word == "uint" || word == "fixed" || word == "ufixed" ||
      word == "var") {
    return true;
  }
  return hasSizedSuffix(word, "uint", 8, 256) || hasSizedSuffix(word, "int", 8, 256) ||
         hasSizedSuffix(word, "bytes", 1, 32);
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::vector<Token> tokenizeCode(std::string_view source) {
  std::vector<Token> tokens = tokenize(source);
  std::erase_if(tokens, [](const Token& t) { return t.kind == TokenKind::Comment; });
  return tokens;
}

}  // namespace smartembed::frontend
