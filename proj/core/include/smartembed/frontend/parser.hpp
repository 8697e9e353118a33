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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "smartembed/frontend/ast.hpp"
#include "smartembed/frontend/token.hpp"

namespace smartembed::frontend {

/// Recursive-descent parser for the supported Solidity subset. Constructs it
/// does not model inside a block (inline assembly, try/catch, custom error
/// reverts, ...) become OpaqueStatement nodes that keep their raw tokens; a
/// warning is recorded for each. Malformed top-level structure throws
/// ParseError.
///
/// `tokens` must not contain Comment tokens.
AstNode parse(std::span<const Token> tokens, std::vector<std::string>* warnings = nullptr);

/// A source file taken through lexing and parsing.
struct ParsedSource {
  std::string sourceRef;
  std::vector<Token> tokens;  // comment-free; Leaf::ordinal indexes this
  AstNode root{NodeKind::SourceUnit};
  std::vector<std::string> warnings;
};

ParsedSource parseSource(std::string_view source, std::string sourceRef = {});

}  // namespace smartembed::frontend
