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

#include <string>
#include <string_view>
#include <vector>

#include "smartembed/frontend/ast.hpp"
#include "smartembed/frontend/document.hpp"

namespace smartembed::frontend {

/// In-order terminal stream of a SourceUnit (granularity Contract) or a
/// ContractDefinition (SubContract). Version literals are written as
/// "versionliteral"; every other terminal keeps its source text.
///
/// Throws InvalidArgument for other node kinds and EmptyContract when the
/// node has no terminals.
TokenDocument serializeContract(const AstNode& node, std::string sourceRef = {});

/// Plain in-order terminal stream of any node, e.g. a function or a state
/// variable declaration.
TokenDocument serializeFragment(const AstNode& node, Granularity granularity,
                                std::string sourceRef = {});

struct StatementContext {
  const AstNode* sourceUnit = nullptr;
  const AstNode* contract = nullptr;  // null for free functions
  const AstNode* function = nullptr;  // FunctionDefinition or ModifierDefinition
};

/// Statement-level stream, in order:
///   1. grammar-rule names of every node from the source unit down to the statement;
///   2. the statement's own terminals (for if/for/while/do only the header,
///      nested statements are serialized on their own);
///   3. the enclosing function header: keyword, name, lowercased name
///      pieces, parameter list, then `returns` and the return list;
///   4. the enclosing contract header: keyword, name, lowercased name, `{ }`.
///
/// `stmt` may be a Statement wrapper or the node it wraps. Throws
/// ContextError if `stmt` is not inside ctx.function and ctx.contract.
TokenDocument serializeStatement(const AstNode& stmt, const StatementContext& ctx,
                                 std::string sourceRef = {});

struct StatementSite {
  const AstNode* statement = nullptr;  // the unit wrapped by a Statement node
  StatementContext context;
};

/// Every statement unit in source order. Blocks are not units themselves;
/// compound statements are, and so is each statement nested in them.
std::vector<StatementSite> collectStatements(const AstNode& sourceUnit);

/// If/for/while/do-while units, which serialize their header only.
bool isCompoundStatement(NodeKind kind) noexcept;

/// "addValue" -> {"add", "value"}; "ERC20Token" -> {"erc20", "token"};
/// "MAX_SUPPLY" -> {"max", "supply"}.
std::vector<std::string> splitIdentifier(std::string_view name);

std::string toLower(std::string_view s);

}  // namespace smartembed::frontend
