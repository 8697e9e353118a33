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

#include "smartembed/frontend/bindings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace smartembed::frontend {

std::size_t Bindings::simpleVariableCount() const noexcept {
  return static_cast<std::size_t>(std::count(simple_.begin(), simple_.end(), true));
}

namespace {

using NameSet = std::set<std::string, std::less<>>;

bool isCallable(NodeKind kind) {
  return kind == NodeKind::FunctionDefinition || kind == NodeKind::ModifierDefinition;
}

// Collect leaves with `role` under `node`, skipping nested callables.
void collectDeclared(const AstNode& node, NameSet& out, bool descendIntoCallables) {
  for (const AstChild& child : node.children()) {
    if (const auto* leaf = std::get_if<Leaf>(&child)) {
      if (leaf->role == IdentRole::VariableDecl) out.insert(leaf->token.text);
      continue;
    }
    const AstNode& sub = *std::get<std::unique_ptr<AstNode>>(child);
    if (!descendIntoCallables && isCallable(sub.kind())) continue;
    collectDeclared(sub, out, true);
  }
}

class Resolver {
 public:
  explicit Resolver(std::size_t tokenCount) : simple_(tokenCount, false) {}

  void run(const AstNode& unit) {
    std::map<std::string, const AstNode*, std::less<>> contracts;
    for (const AstNode* child : unit.childNodes()) {
      if (child->kind() == NodeKind::ContractDefinition) contracts.emplace(child->name(), child);
    }
    for (const AstNode* child : unit.childNodes()) {
      if (child->kind() == NodeKind::ContractDefinition) {
        NameSet stateVars;
        std::set<const AstNode*> visited;
        collectStateVariables(*child, contracts, stateVars, visited);
        mark(*child, stateVars);
      } else {
        mark(*child, NameSet{});
      }
    }
  }

  Bindings finish() && { return Bindings(std::move(simple_)); }

 private:
  void collectStateVariables(const AstNode& contract,
                             const std::map<std::string, const AstNode*, std::less<>>& contracts,
                             NameSet& out, std::set<const AstNode*>& visited) {
    if (!visited.insert(&contract).second) return;
    for (const AstNode* part : contract.childNodes()) {
      if (part->kind() == NodeKind::InheritanceSpecifier) {
        const Leaf* base = part->firstDirectLeaf();
        if (!base) continue;
        auto it = contracts.find(base->token.text);
        if (it != contracts.end()) collectStateVariables(*it->second, contracts, out, visited);
        continue;
      }
      if (part->kind() != NodeKind::ContractPart) continue;
      if (const AstNode* decl = part->firstChild(NodeKind::StateVariableDeclaration)) {
        collectDeclared(*decl, out, false);
      }
    }
  }

  // Walk `node`; entering a callable extends the scope with its declarations.
  void mark(const AstNode& node, const NameSet& scope) {
    if (isCallable(node.kind())) {
      NameSet inner = scope;
      collectDeclared(node, inner, true);
      markLeaves(node, inner);
      return;
    }
    for (const AstChild& child : node.children()) {
      if (const auto* leaf = std::get_if<Leaf>(&child)) {
        markLeaf(*leaf, scope);
      } else {
        mark(*std::get<std::unique_ptr<AstNode>>(child), scope);
      }
    }
  }

  void markLeaves(const AstNode& node, const NameSet& scope) {
    node.forEachLeaf([&](const Leaf& leaf) { markLeaf(leaf, scope); });
  }

  void markLeaf(const Leaf& leaf, const NameSet& scope) {
    if (leaf.ordinal >= simple_.size()) return;
    if (leaf.role == IdentRole::VariableDecl ||
        (leaf.role == IdentRole::VariableRef && scope.contains(leaf.token.text))) {
      simple_[leaf.ordinal] = true;
    }
  }

  std::vector<bool> simple_;
};

}  // namespace

Bindings resolveBindings(const AstNode& sourceUnit, std::size_t tokenCount) {
  Resolver resolver(tokenCount);
  resolver.run(sourceUnit);
  return std::move(resolver).finish();
}

}  // namespace smartembed::frontend
