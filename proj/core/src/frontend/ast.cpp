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

#include "smartembed/frontend/ast.hpp"

#include <algorithm>

namespace smartembed::frontend {

std::string_view nodeKindName(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::SourceUnit: return "sourceUnit";
    case NodeKind::PragmaDirective: return "pragmaDirective";
    case NodeKind::ImportDirective: return "importDirective";
    case NodeKind::ContractDefinition: return "contractDefinition";
    case NodeKind::InheritanceSpecifier: return "inheritanceSpecifier";
    case NodeKind::ContractPart: return "contractPart";
    case NodeKind::StateVariableDeclaration: return "stateVariableDeclaration";
    case NodeKind::FunctionDefinition: return "functionDefinition";
    case NodeKind::ModifierDefinition: return "modifierDefinition";
    case NodeKind::ModifierInvocation: return "modifierInvocation";
    case NodeKind::EventDefinition: return "eventDefinition";
    case NodeKind::StructDefinition: return "structDefinition";
    case NodeKind::EnumDefinition: return "enumDefinition";
    case NodeKind::UsingForDeclaration: return "usingForDeclaration";
    case NodeKind::ParameterList: return "parameterList";
    case NodeKind::Parameter: return "parameter";
    case NodeKind::TypeName: return "typeName";
    case NodeKind::Block: return "block";
    case NodeKind::Statement: return "statement";
    case NodeKind::SimpleStatement: return "simpleStatement";
    case NodeKind::VariableDeclarationStatement: return "variableDeclarationStatement";
    case NodeKind::ExpressionStatement: return "expressionStatement";
    case NodeKind::IfStatement: return "ifStatement";
    case NodeKind::ForStatement: return "forStatement";
    case NodeKind::WhileStatement: return "whileStatement";
    case NodeKind::DoWhileStatement: return "doWhileStatement";
    case NodeKind::ReturnStatement: return "returnStatement";
    case NodeKind::EmitStatement: return "emitStatement";
    case NodeKind::ThrowStatement: return "throwStatement";
    case NodeKind::BreakStatement: return "breakStatement";
    case NodeKind::ContinueStatement: return "continueStatement";
    case NodeKind::PlaceholderStatement: return "placeholderStatement";
    case NodeKind::OpaqueStatement: return "opaqueStatement";
    case NodeKind::Expression: return "expression";
  }
  return "unknown";
}

void AstNode::widen(int start, int end) {
  if (start <= 0) return;
  if (spanStart_ == 0) {
    spanStart_ = start;
    spanEnd_ = end;
    return;
  }
  spanStart_ = std::min(spanStart_, start);
  spanEnd_ = std::max(spanEnd_, end);
}

void AstNode::add(Leaf leaf) {
  widen(leaf.token.line, leaf.token.line);
  children_.emplace_back(std::move(leaf));
}

void AstNode::add(std::unique_ptr<AstNode> node) {
  widen(node->spanStart_, node->spanEnd_);
  children_.emplace_back(std::move(node));
}

void AstNode::prepend(Leaf leaf) {
  widen(leaf.token.line, leaf.token.line);
  children_.insert(children_.begin(), AstChild(std::move(leaf)));
}

void AstNode::forEachLeaf(const std::function<void(const Leaf&)>& fn) const {
  for (const AstChild& child : children_) {
    if (const auto* leaf = std::get_if<Leaf>(&child)) {
      fn(*leaf);
    } else {
      std::get<std::unique_ptr<AstNode>>(child)->forEachLeaf(fn);
    }
  }
}

std::vector<const Leaf*> AstNode::leaves() const {
  std::vector<const Leaf*> out;
  forEachLeaf([&](const Leaf& l) { out.push_back(&l); });
  return out;
}

std::vector<const AstNode*> AstNode::childNodes() const {
  std::vector<const AstNode*> out;
  for (const AstChild& child : children_) {
    if (const auto* node = std::get_if<std::unique_ptr<AstNode>>(&child)) out.push_back(node->get());
  }
  return out;
}

const AstNode* AstNode::firstChild(NodeKind kind) const {
  for (const AstChild& child : children_) {
    if (const auto* node = std::get_if<std::unique_ptr<AstNode>>(&child)) {
      if ((*node)->kind() == kind) return node->get();
    }
  }
  return nullptr;
}

const Leaf* AstNode::firstDirectLeaf() const {
  for (const AstChild& child : children_) {
    if (const auto* leaf = std::get_if<Leaf>(&child)) return leaf;
  }
  return nullptr;
}

void AstNode::forEachNode(const std::function<void(const AstNode&)>& fn) const {
  fn(*this);
  for (const AstChild& child : children_) {
    if (const auto* node = std::get_if<std::unique_ptr<AstNode>>(&child)) (*node)->forEachNode(fn);
  }
}

}  // namespace smartembed::frontend
