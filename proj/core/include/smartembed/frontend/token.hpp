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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace smartembed::frontend {

enum class TokenKind : std::uint8_t {
  Keyword,
  Identifier,
  Punctuation,
  Operator,
  DecimalNumber,
  HexNumber,
  StringLiteral,
  BoolLiteral,
  VersionLiteral,
  Comment,
  Pragma,
};

std::string_view tokenKindName(TokenKind kind) noexcept;

struct Token {
  std::string text;
  TokenKind kind = TokenKind::Identifier;
  int line = 1;
  int column = 1;

  bool is(TokenKind k, std::string_view t) const noexcept { return kind == k && text == t; }
  bool operator==(const Token&) const = default;
};

/// True for literal kinds whose text is erased by normalization.
constexpr bool isLiteral(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::DecimalNumber:
    case TokenKind::HexNumber:
    case TokenKind::StringLiteral:
    case TokenKind::BoolLiteral:
    case TokenKind::VersionLiteral:
      return true;
    default:
      return false;
  }
}

/// Canonical lowercase placeholder for a literal kind ("decimalnumber", ...).
std::string_view literalPlaceholder(TokenKind kind) noexcept;

}  // namespace smartembed::frontend
