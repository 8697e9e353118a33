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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "smartembed/frontend/token.hpp"

namespace smartembed::frontend {

enum class Granularity : std::uint8_t { Contract, SubContract, Function, Statement };

std::string_view granularityName(Granularity g) noexcept;
/// Inverse of granularityName; throws InvalidArgument on an unknown name.
Granularity parseGranularity(std::string_view name);

/// Where a document token came from. Normalization rewrites Terminal tokens
/// only; Structural (grammar-rule names) and Synthesized tokens (name
/// sub-tokens, the contract-name copy, header braces) pass through.
enum class TokenOrigin : std::uint8_t { Structural, Terminal, Synthesized, Canonical };

struct TokenTag {
  static constexpr std::size_t kNoOrdinal = std::numeric_limits<std::size_t>::max();

  TokenOrigin origin = TokenOrigin::Terminal;
  TokenKind kind = TokenKind::Identifier;
  std::size_t ordinal = kNoOrdinal;

  bool operator==(const TokenTag&) const = default;
};

/// A serialized token stream for one code fragment. `tags` is parallel to
/// `tokens` for documents produced by the serializers and empty for
/// documents read back from the text format.
struct TokenDocument {
  std::string id;  // "<startLine>_<endLine>"
  Granularity granularity = Granularity::Contract;
  std::vector<std::string> tokens;
  std::vector<TokenTag> tags;
  std::string sourceRef;

  int startLine() const;
  int endLine() const;
  std::string joined() const;

  bool operator==(const TokenDocument&) const = default;
};

std::string spanId(int startLine, int endLine);

/// `"<id> : <space-joined tokens>"`.
std::string formatDocumentLine(const TokenDocument& doc);
/// Inverse of formatDocumentLine (tags are not recoverable). Throws
/// InvalidArgument when the line has no " : " separator or no tokens.
TokenDocument parseDocumentLine(std::string_view line, Granularity granularity = Granularity::Contract);

}  // namespace smartembed::frontend
