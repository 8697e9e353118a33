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
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "smartembed/frontend/token.hpp"

namespace smartembed::frontend {

enum class NodeKind : std::uint8_t {
  SourceUnit,
  PragmaDirective,
  ImportDirective,
  ContractDefinition,
  InheritanceSpecifier,
  ContractPart,
  StateVariableDeclaration,
  FunctionDefinition,
  ModifierDefinition,
  ModifierInvocation,
  EventDefinition,
  StructDefinition,
  EnumDefinition,
  UsingForDeclaration,
  ParameterList,
  Parameter,
  TypeName,
  Block,
  Statement,
  SimpleStatement,
  VariableDeclarationStatement,
  ExpressionStatement,
  IfStatement,
  ForStatement,
  WhileStatement,
  DoWhileStatement,
  ReturnStatement,
  EmitStatement,
  ThrowStatement,
  BreakStatement,
  ContinueStatement,
  PlaceholderStatement,
  OpaqueStatement,
  Expression,
};

/// Grammar-rule spelling of a node kind: "sourceUnit", "simpleStatement", ...
std::string_view nodeKindName(NodeKind kind) noexcept;

/// Syntactic role of an identifier-like leaf, assigned by the parser and
/// consumed by binding resolution.
enum class IdentRole : std::uint8_t {
  None,
  VariableDecl,
  VariableRef,
  TypeRef,
  Member,
  ContractName,
  FunctionName,
  ModifierName,
  EventName,
  DeclName,
};

struct Leaf {
  Token token;
  std::size_t ordinal = 0;  // index into the comment-free token stream
  IdentRole role = IdentRole::None;
};

class AstNode;
using AstChild = std::variant<Leaf, std::unique_ptr<AstNode>>;

class AstNode {
 public:
  explicit AstNode(NodeKind kind) : kind_(kind) {}

  AstNode(AstNode&&) noexcept = default;
  AstNode& operator=(AstNode&&) noexcept = default;
  AstNode(const AstNode&) = delete;
  AstNode& operator=(const AstNode&) = delete;

  NodeKind kind() const noexcept { return kind_; }
  const std::vector<AstChild>& children() const noexcept { return children_; }
  int spanStart() const noexcept { return spanStart_; }
  int spanEnd() const noexcept { return spanEnd_; }
  bool empty() const noexcept { return children_.empty(); }

  /// Declared name for definitions (contract, function, modifier, event); empty otherwise.
  const std::string& name() const noexcept { return name_; }
  void setName(std::string name) { name_ = std::move(name); }

  void add(Leaf leaf);
  void add(std::unique_ptr<AstNode> node);
  /// Prepends a leaf; used when a construct is recognized after its first token.
  void prepend(Leaf leaf);

  /// Leaves in order (pre-order over children).
  void forEachLeaf(const std::function<void(const Leaf&)>& fn) const;
  std::vector<const Leaf*> leaves() const;
  std::vector<const AstNode*> childNodes() const;
  const AstNode* firstChild(NodeKind kind) const;
  /// First leaf that is a direct child of this node.
  const Leaf* firstDirectLeaf() const;

  /// Pre-order walk over this node and all descendant nodes.
  void forEachNode(const std::function<void(const AstNode&)>& fn) const;

 private:
  void widen(int start, int end);

  NodeKind kind_;
  std::vector<AstChild> children_;
  int spanStart_ = 0;
  int spanEnd_ = 0;
  std::string name_;
};

}  // namespace smartembed::frontend
