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

#include <string_view>
#include <vector>

#include "smartembed/frontend/token.hpp"

namespace smartembed::frontend {

/// Splits Solidity source into tokens. Comments are kept as Comment tokens;
/// columns count Unicode code points. Inside a pragma directive, numeric
/// runs such as `0.4.15` lex as a single VersionLiteral.
///
/// Throws LexError on an unterminated string or block comment, or on a
/// character outside the Solidity alphabet.
std::vector<Token> tokenize(std::string_view source);

/// tokenize() with Comment tokens dropped; the input expected by parse().
std::vector<Token> tokenizeCode(std::string_view source);

bool isSolidityKeyword(std::string_view word) noexcept;
bool isElementaryTypeName(std::string_view word) noexcept;

}  // namespace smartembed::frontend
