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

#include "smartembed/frontend/serializer.hpp"

#include <algorithm>
#include <cctype>

#include "smartembed/error.hpp"

namespace smartembed::frontend {

std::string toLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> splitIdentifier(std::string_view name) {
  enum class Cls { Lower, Upper, Digit, Other };
  auto cls = [](char c) {
    const auto u = static_cast<unsigned char>(c);
    if (std::islower(u)) return Cls::Lower;
    if (std::isupper(u)) return Cls::Upper;
    if (std::isdigit(u)) return Cls::Digit;
    return Cls::Other;
  };

  std::vector<std::string> pieces;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) pieces.push_back(toLower(current));
    current.clear();
  };

  for (std::size_t i = 0; i < name.size(); ++i) {
    const Cls c = cls(name[i]);
    if (c == Cls::Other) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const Cls prev = cls(current.back());
      const bool nextLower = i + 1 < name.size() && cls(name[i + 1]) == Cls::Lower;
      const bool boundary = (prev == Cls::Lower && c == Cls::Upper) ||
                            (prev == Cls::Upper && c == Cls::Upper && nextLower) ||
                            (prev == Cls::Lower && c == Cls::Digit) ||
                            (prev == Cls::Digit && c != Cls::Digit);
      if (boundary) flush();
    }
    current.push_back(name[i]);
  }
  flush();
  return pieces;
}

namespace {

TokenTag terminalTag(const Leaf& leaf) {
  return TokenTag{TokenOrigin::Terminal, leaf.token.kind, leaf.ordinal};
}

void pushTerminal(TokenDocument& doc, const Leaf& leaf) {
  doc.tokens.push_back(leaf.token.kind == TokenKind::VersionLiteral
                           ? std::string(literalPlaceholder(TokenKind::VersionLiteral))
                           : leaf.token.text);
  doc.tags.push_back(terminalTag(leaf));
}

void pushSynthesized(TokenDocument& doc, std::string text, TokenKind kind) {
  doc.tokens.push_back(std::move(text));
  doc.tags.push_back(TokenTag{TokenOrigin::Synthesized, kind, TokenTag::kNoOrdinal});
}

void pushLeaves(TokenDocument& doc, const AstNode& node) {
  node.forEachLeaf([&](const Leaf& leaf) { pushTerminal(doc, leaf); });
}

bool isCompound(NodeKind kind) {
  return kind == NodeKind::IfStatement || kind == NodeKind::ForStatement ||
         kind == NodeKind::WhileStatement || kind == NodeKind::DoWhileStatement;
}

// Leaves of a compound statement minus its nested Statement subtrees.
void pushHeaderLeaves(TokenDocument& doc, const AstNode& node) {
  for (const AstChild& child : node.children()) {
    if (const auto* leaf = std::get_if<Leaf>(&child)) {
      pushTerminal(doc, *leaf);
      continue;
    }
    const AstNode& sub = *std::get<std::unique_ptr<AstNode>>(child);
    if (sub.kind() == NodeKind::Statement) continue;
    pushLeaves(doc, sub);
  }
}

bool findPath(const AstNode& current, const AstNode* target, std::vector<const AstNode*>& path) {
  path.push_back(&current);
  if (&current == target) return true;
  for (const AstNode* child : current.childNodes()) {
    if (findPath(*child, target, path)) return true;
  }
  path.pop_back();
  return false;
}

void pushFunctionHeader(TokenDocument& doc, const AstNode& fn) {
  bool sawReturns = false;
  int lists = 0;
  for (const AstChild& child : fn.children()) {
    if (const auto* leaf = std::get_if<Leaf>(&child)) {
      const bool keyword = &child == &fn.children().front();
      if (keyword) {
        pushTerminal(doc, *leaf);
      } else if (leaf->role == IdentRole::FunctionName || leaf->role == IdentRole::ModifierName) {
        pushTerminal(doc, *leaf);
        for (std::string& piece : splitIdentifier(leaf->token.text)) {
          pushSynthesized(doc, std::move(piece), TokenKind::Identifier);
        }
      } else if (leaf->token.is(TokenKind::Keyword, "returns")) {
        sawReturns = true;
        pushTerminal(doc, *leaf);
      }
      continue;
    }
    const AstNode& sub = *std::get<std::unique_ptr<AstNode>>(child);
    if (sub.kind() != NodeKind::ParameterList) continue;
    if (lists == 0 || sawReturns) pushLeaves(doc, sub);
    ++lists;
  }
}

void pushContractHeader(TokenDocument& doc, const AstNode& contract) {
  for (const AstChild& child : contract.children()) {
    const auto* leaf = std::get_if<Leaf>(&child);
    if (!leaf) continue;
    if (leaf->role == IdentRole::ContractName) {
      pushTerminal(doc, *leaf);
      pushSynthesized(doc, toLower(leaf->token.text), TokenKind::Identifier);
      break;
    }
    if (leaf->token.kind == TokenKind::Keyword && leaf->token.text != "abstract") {
      pushTerminal(doc, *leaf);
    }
  }
  pushSynthesized(doc, "{", TokenKind::Punctuation);
  pushSynthesized(doc, "}", TokenKind::Punctuation);
}

class StatementCollector {
 public:
  explicit StatementCollector(const AstNode& unit) { ctx_.sourceUnit = &unit; }

  std::vector<StatementSite> run(const AstNode& unit) {
    visit(unit);
    return std::move(sites_);
  }

 private:
  void visit(const AstNode& node) {
    const StatementContext saved = ctx_;
    if (node.kind() == NodeKind::ContractDefinition) ctx_.contract = &node;
    if (node.kind() == NodeKind::FunctionDefinition || node.kind() == NodeKind::ModifierDefinition) {
      ctx_.function = &node;
    }
    if (node.kind() == NodeKind::Statement && ctx_.function) {
      const std::vector<const AstNode*> inner = node.childNodes();
      if (!inner.empty() && inner.front()->kind() != NodeKind::Block) {
        sites_.push_back(StatementSite{inner.front(), ctx_});
      }
    }
    for (const AstNode* child : node.childNodes()) visit(*child);
    ctx_ = saved;
  }

  StatementContext ctx_;
  std::vector<StatementSite> sites_;
};

}  // namespace

TokenDocument serializeFragment(const AstNode& node, Granularity granularity,
                                std::string sourceRef) {
  TokenDocument doc;
  doc.granularity = granularity;
  doc.sourceRef = std::move(sourceRef);
  doc.id = spanId(std::max(node.spanStart(), 1), std::max(node.spanEnd(), 1));
  pushLeaves(doc, node);
  return doc;
}

TokenDocument serializeContract(const AstNode& node, std::string sourceRef) {
  Granularity granularity;
  if (node.kind() == NodeKind::SourceUnit) {
    granularity = Granularity::Contract;
  } else if (node.kind() == NodeKind::ContractDefinition) {
    granularity = Granularity::SubContract;
  } else {
    throw InvalidArgument("serializeContract expects a source unit or contract definition, got " +
                          std::string(nodeKindName(node.kind())));
  }
  TokenDocument doc = serializeFragment(node, granularity, std::move(sourceRef));
  if (doc.tokens.empty()) throw EmptyContract("contract contains no tokens");
  return doc;
}

TokenDocument serializeStatement(const AstNode& stmt, const StatementContext& ctx,
                                 std::string sourceRef) {
  if (!ctx.sourceUnit || !ctx.function) {
    throw ContextError("statement context needs a source unit and an enclosing function");
  }
  const AstNode* unit = &stmt;
  if (stmt.kind() == NodeKind::Statement) {
    const std::vector<const AstNode*> inner = stmt.childNodes();
    if (inner.empty()) throw ContextError("empty statement node");
    unit = inner.front();
  }

  std::vector<const AstNode*> path;
  if (!findPath(*ctx.sourceUnit, unit, path)) {
    throw ContextError("statement is not part of the given source unit");
  }
  const auto onPath = [&](const AstNode* n) {
    return std::find(path.begin(), path.end(), n) != path.end();
  };
  if (!onPath(ctx.function)) throw ContextError("statement is not inside the given function");
  if (ctx.contract && !onPath(ctx.contract)) {
    throw ContextError("statement is not inside the given contract");
  }

  TokenDocument doc;
  doc.granularity = Granularity::Statement;
  doc.sourceRef = std::move(sourceRef);
  doc.id = spanId(unit->spanStart(), unit->spanEnd());

  for (const AstNode* n : path) {
    doc.tokens.emplace_back(nodeKindName(n->kind()));
    doc.tags.push_back(TokenTag{TokenOrigin::Structural, TokenKind::Identifier, TokenTag::kNoOrdinal});
  }
  if (isCompound(unit->kind())) {
    pushHeaderLeaves(doc, *unit);
  } else {
    pushLeaves(doc, *unit);
  }
  pushFunctionHeader(doc, *ctx.function);
  if (ctx.contract) pushContractHeader(doc, *ctx.contract);
  return doc;
}

std::vector<StatementSite> collectStatements(const AstNode& sourceUnit) {
  return StatementCollector(sourceUnit).run(sourceUnit);
}

bool isCompoundStatement(NodeKind kind) noexcept { return isCompound(kind); }

}  // namespace smartembed::frontend
