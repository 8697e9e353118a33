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

#include "smartembed/frontend/parser.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "smartembed/error.hpp"
#include "smartembed/frontend/lexer.hpp"

namespace smartembed::frontend {
namespace {

using NodePtr = std::unique_ptr<AstNode>;

// Reserved in later compiler versions but common as plain names in older contracts.
constexpr std::array<std::string_view, 12> kContextualWords{{
    "abstract", "calldata", "catch", "error", "fallback", "immutable", "override", "receive",
    "revert", "try", "type", "unchecked",
}};

constexpr std::array<std::string_view, 11> kUnits{{
    "wei", "gwei", "szabo", "finney", "ether", "seconds", "minutes", "hours", "days", "weeks",
    "years",
}};

constexpr std::array<std::string_view, 12> kAssignmentOps{{
    "=", "+=", "-=", "*=", "/=", "%=", "|=", "&=", "^=", "<<=", ">>=", ">>>=",
}};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

int binaryPrecedence(std::string_view op) {
  if (op == "||") return 1;
  if (op == "&&") return 2;
  if (op == "==" || op == "!=") return 3;
  if (op == "<" || op == ">" || op == "<=" || op == ">=") return 4;
  if (op == "|") return 5;
  if (op == "^") return 6;
  if (op == "&") return 7;
  if (op == "<<" || op == ">>" || op == ">>>") return 8;
  if (op == "+" || op == "-") return 9;
  if (op == "*" || op == "/" || op == "%") return 10;
  if (op == "**") return 11;
  return 0;
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::vector<std::string>* warnings)
      : toks_(tokens), warnings_(warnings) {}

  AstNode run() {
    NodePtr unit = parseSourceUnit();
    return std::move(*unit);
  }

 private:
  // ---- token access ------------------------------------------------------

  bool eof() const { return pos_ >= toks_.size(); }
  const Token* peekTok(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? &toks_[pos_ + ahead] : nullptr;
  }

  bool atSymbol(std::string_view s, std::size_t ahead = 0) const {
    const Token* t = peekTok(ahead);
    return t && (t->kind == TokenKind::Punctuation || t->kind == TokenKind::Operator) &&
           t->text == s;
  }
  bool atKeyword(std::string_view s, std::size_t ahead = 0) const {
    const Token* t = peekTok(ahead);
    return t && (t->kind == TokenKind::Keyword || t->kind == TokenKind::Pragma) && t->text == s;
  }
  /// Identifier, or a contextual keyword used as a name.
  bool atName(std::size_t ahead = 0) const {
    const Token* t = peekTok(ahead);
    if (!t) return false;
    return t->kind == TokenKind::Identifier ||
           (t->kind == TokenKind::Keyword && contains(kContextualWords, t->text));
  }
  bool atWord(std::string_view s, std::size_t ahead = 0) const {
    const Token* t = peekTok(ahead);
    return t && (t->kind == TokenKind::Identifier || t->kind == TokenKind::Keyword) &&
           t->text == s;
  }

  Leaf take(IdentRole role = IdentRole::None) {
    if (eof()) fail("unexpected end of input");
    Leaf leaf{toks_[pos_], pos_, role};
    ++pos_;
    return leaf;
  }

  Leaf expect(std::string_view text) {
    if (eof()) fail("unexpected end of input; expected '" + std::string(text) + "'");
    const Token& t = toks_[pos_];
    if (t.text != text || t.kind == TokenKind::StringLiteral) {
      fail("expected '" + std::string(text) + "' but found '" + t.text + "'");
    }
    return take();
  }

  Leaf expectName(IdentRole role) {
    if (!atName()) {
      fail(eof() ? std::string("unexpected end of input; expected identifier")
                 : "expected identifier but found '" + toks_[pos_].text + "'");
    }
    return take(role);
  }

  [[noreturn]] void fail(const std::string& message) const {
    if (!eof()) throw ParseError(message, toks_[pos_].line, toks_[pos_].column);
    if (toks_.empty()) throw ParseError(message, 1, 1);
    const Token& last = toks_.back();
    throw ParseError(message, last.line, last.column + static_cast<int>(last.text.size()));
  }

  static NodePtr node(NodeKind kind) { return std::make_unique<AstNode>(kind); }

  template <typename Fn>
  std::optional<NodePtr> attempt(Fn&& fn) {
    const std::size_t saved = pos_;
    const std::size_t savedWarnings = warnings_ ? warnings_->size() : 0;
    try {
      return fn();
    } catch (const ParseError&) {
      pos_ = saved;
      if (warnings_) warnings_->resize(savedWarnings);
      return std::nullopt;
    }
  }

  void warn(const std::string& message) {
    if (warnings_) warnings_->push_back(message);
  }

  // ---- top level ---------------------------------------------------------

  NodePtr parseSourceUnit() {
    NodePtr unit = node(NodeKind::SourceUnit);
    while (!eof()) {
      if (peekTok()->kind == TokenKind::Pragma) {
        unit->add(parseDirective(NodeKind::PragmaDirective));
      } else if (atKeyword("import")) {
        unit->add(parseDirective(NodeKind::ImportDirective));
      } else if (atKeyword("contract") || atKeyword("library") || atKeyword("interface") ||
                 (atWord("abstract") && atKeyword("contract", 1))) {
        unit->add(parseContract());
      } else if (atKeyword("struct")) {
        unit->add(parseStruct());
      } else if (atKeyword("enum")) {
        unit->add(parseEnum());
      } else if (atKeyword("function")) {
        unit->add(parseFunction());
      } else if (auto constant = attempt([&] { return parseStateVariable(); })) {
        unit->add(std::move(*constant));
      } else {
        fail("expected pragma, import or contract definition but found '" + peekTok()->text + "'");
      }
    }
    return unit;
  }

  NodePtr parseDirective(NodeKind kind) {
    NodePtr directive = node(kind);
    directive->add(take());
    while (!atSymbol(";")) {
      if (eof()) fail("unexpected end of input; expected ';'");
      directive->add(take());
    }
    directive->add(take());
    return directive;
  }

  NodePtr parseContract() {
    NodePtr contract = node(NodeKind::ContractDefinition);
    if (atWord("abstract")) contract->add(take());
    contract->add(take());
    Leaf name = expectName(IdentRole::ContractName);
    contract->setName(name.token.text);
    contract->add(std::move(name));
    if (atKeyword("is")) {
      contract->add(take());
      while (true) {
        contract->add(parseInheritance());
        if (!atSymbol(",")) break;
        contract->add(take());
      }
    }
    contract->add(expect("{"));
    while (!atSymbol("}")) {
      if (eof()) fail("unexpected end of input; expected '}'");
      contract->add(parseContractPart());
    }
    contract->add(take());
    return contract;
  }

  NodePtr parseInheritance() {
    NodePtr spec = node(NodeKind::InheritanceSpecifier);
    spec->add(expectName(IdentRole::TypeRef));
    while (atSymbol(".") && atName(1)) {
      spec->add(take());
      spec->add(take(IdentRole::TypeRef));
    }
    if (atSymbol("(")) parseCallArguments(*spec);
    return spec;
  }

  NodePtr parseContractPart() {
    NodePtr part = node(NodeKind::ContractPart);
    if (atKeyword("function") || atKeyword("constructor") ||
        ((atWord("fallback") || atWord("receive")) && atSymbol("(", 1))) {
      part->add(parseFunction());
    } else if (atKeyword("modifier")) {
      part->add(parseModifier());
    } else if (atKeyword("event")) {
      part->add(parseEvent());
    } else if (atKeyword("struct")) {
      part->add(parseStruct());
    } else if (atKeyword("enum")) {
      part->add(parseEnum());
    } else if (atKeyword("using")) {
      part->add(parseUsing());
    } else if (auto decl = attempt([&] { return parseStateVariable(); })) {
      part->add(std::move(*decl));
    } else {
      part->add(parseOpaque());
    }
    return part;
  }

  NodePtr parseStateVariable() {
    NodePtr decl = node(NodeKind::StateVariableDeclaration);
    decl->add(parseTypeName());
    while (true) {
      if (atKeyword("public") || atKeyword("private") || atKeyword("internal") ||
          atKeyword("constant") || atWord("immutable")) {
        decl->add(take());
      } else if (atWord("override")) {
        parseOverride(*decl);
      } else {
        break;
      }
    }
    decl->add(expectName(IdentRole::VariableDecl));
    if (atSymbol("=")) {
      decl->add(take());
      decl->add(parseExpression());
    }
    decl->add(expect(";"));
    return decl;
  }

  void parseOverride(AstNode& into) {
    into.add(take());
    if (!atSymbol("(")) return;
    into.add(take());
    while (!atSymbol(")")) {
      if (atSymbol(",") || atSymbol(".")) {
        into.add(take());
      } else {
        into.add(expectName(IdentRole::TypeRef));
      }
    }
    into.add(take());
  }

  NodePtr parseFunction() {
    NodePtr fn = node(NodeKind::FunctionDefinition);
    if (atKeyword("function")) {
      fn->add(take());
      if (atName()) {
        Leaf name = take(IdentRole::FunctionName);
        fn->setName(name.token.text);
        fn->add(std::move(name));
      }
    } else {
      Leaf kw = take();
      fn->setName(kw.token.text);
      fn->add(std::move(kw));
    }
    fn->add(parseParameterList());
    parseFunctionModifiers(*fn);
    if (atKeyword("returns")) {
      fn->add(take());
      fn->add(parseParameterList());
    }
    if (atSymbol(";")) {
      fn->add(take());
    } else {
      fn->add(parseBlock());
    }
    return fn;
  }

  void parseFunctionModifiers(AstNode& fn) {
    while (!eof()) {
      if (atKeyword("public") || atKeyword("private") || atKeyword("internal") ||
          atKeyword("external") || atKeyword("pure") || atKeyword("view") ||
          atKeyword("payable") || atKeyword("constant") || atKeyword("virtual")) {
        fn.add(take());
      } else if (atWord("override")) {
        parseOverride(fn);
      } else if (atName() && !atKeyword("returns")) {
        NodePtr invocation = node(NodeKind::ModifierInvocation);
        invocation->add(take(IdentRole::ModifierName));
        if (atSymbol("(")) parseCallArguments(*invocation);
        fn.add(std::move(invocation));
      } else {
        break;
      }
    }
  }

  NodePtr parseModifier() {
    NodePtr mod = node(NodeKind::ModifierDefinition);
    mod->add(take());
    Leaf name = expectName(IdentRole::ModifierName);
    mod->setName(name.token.text);
    mod->add(std::move(name));
    if (atSymbol("(")) mod->add(parseParameterList());
    while (atKeyword("virtual") || atWord("override")) {
      if (atKeyword("virtual")) {
        mod->add(take());
      } else {
        parseOverride(*mod);
      }
    }
    if (atSymbol(";")) {
      mod->add(take());
    } else {
      mod->add(parseBlock());
    }
    return mod;
  }

  NodePtr parseEvent() {
    NodePtr ev = node(NodeKind::EventDefinition);
    ev->add(take());
    Leaf name = expectName(IdentRole::EventName);
    ev->setName(name.token.text);
    ev->add(std::move(name));
    ev->add(parseParameterList());
    if (atKeyword("anonymous")) ev->add(take());
    ev->add(expect(";"));
    return ev;
  }

  NodePtr parseStruct() {
    NodePtr st = node(NodeKind::StructDefinition);
    st->add(take());
    Leaf name = expectName(IdentRole::DeclName);
    st->setName(name.token.text);
    st->add(std::move(name));
    st->add(expect("{"));
    while (!atSymbol("}")) {
      if (eof()) fail("unexpected end of input; expected '}'");
      st->add(parseTypeName());
      st->add(expectName(IdentRole::Member));
      st->add(expect(";"));
    }
    st->add(take());
    return st;
  }

  NodePtr parseEnum() {
    NodePtr en = node(NodeKind::EnumDefinition);
    en->add(take());
    Leaf name = expectName(IdentRole::DeclName);
    en->setName(name.token.text);
    en->add(std::move(name));
    en->add(expect("{"));
    while (!atSymbol("}")) {
      if (atSymbol(",")) {
        en->add(take());
      } else {
        en->add(expectName(IdentRole::Member));
      }
    }
    en->add(take());
    return en;
  }

  NodePtr parseUsing() {
    NodePtr u = node(NodeKind::UsingForDeclaration);
    u->add(take());
    while (!atSymbol(";")) {
      if (eof()) fail("unexpected end of input; expected ';'");
      u->add(take(atName() ? IdentRole::TypeRef : IdentRole::None));
    }
    u->add(take());
    return u;
  }

  NodePtr parseParameterList() {
    NodePtr list = node(NodeKind::ParameterList);
    list->add(expect("("));
    while (!atSymbol(")")) {
      if (!list->childNodes().empty()) list->add(expect(","));
      NodePtr param = node(NodeKind::Parameter);
      param->add(parseTypeName());
      while (atKeyword("memory") || atKeyword("storage") || atWord("calldata") ||
             atKeyword("indexed") || atKeyword("payable")) {
        param->add(take());
      }
      if (atName()) {
        param->add(take(IdentRole::VariableDecl));
      }
      list->add(std::move(param));
    }
    list->add(take());
    return list;
  }

  NodePtr parseTypeName() {
    NodePtr type = node(NodeKind::TypeName);
    const Token* t = peekTok();
    if (!t) fail("unexpected end of input; expected type name");
    if (atKeyword("mapping")) {
      type->add(take());
      type->add(expect("("));
      type->add(parseTypeName());
      if (atName()) type->add(take(IdentRole::Member));
      type->add(expect("=>"));
      type->add(parseTypeName());
      if (atName()) type->add(take(IdentRole::Member));
      type->add(expect(")"));
    } else if (atKeyword("function")) {
      type->add(take());
      type->add(parseParameterList());
      while (atKeyword("internal") || atKeyword("external") || atKeyword("pure") ||
             atKeyword("view") || atKeyword("payable")) {
        type->add(take());
      }
      if (atKeyword("returns")) {
        type->add(take());
        type->add(parseParameterList());
      }
    } else if (t->kind == TokenKind::Keyword && isElementaryTypeName(t->text)) {
      const bool isAddress = t->text == "address";
      type->add(take());
      if (isAddress && atKeyword("payable")) type->add(take());
    } else if (atName()) {
      type->add(take(IdentRole::TypeRef));
      while (atSymbol(".") && atName(1)) {
        type->add(take());
        type->add(take(IdentRole::TypeRef));
      }
    } else {
      fail("expected type name but found '" + t->text + "'");
    }
    while (atSymbol("[")) {
      type->add(take());
      if (!atSymbol("]")) type->add(parseExpression());
      type->add(expect("]"));
    }
    return type;
  }

  // ---- statements --------------------------------------------------------

  NodePtr parseBlock(std::optional<Leaf> prefix = std::nullopt) {
    NodePtr block = node(NodeKind::Block);
    if (prefix) block->add(std::move(*prefix));
    block->add(expect("{"));
    while (!atSymbol("}")) {
      if (eof()) fail("unexpected end of input; expected '}'");
      block->add(parseStatement());
    }
    block->add(take());
    return block;
  }

  NodePtr parseStatement() {
    NodePtr stmt = node(NodeKind::Statement);
    const std::size_t start = pos_;
    const std::size_t savedWarnings = warnings_ ? warnings_->size() : 0;
    try {
      stmt->add(parseStatementBody());
    } catch (const ParseError&) {
      pos_ = start;
      if (warnings_) warnings_->resize(savedWarnings);
      stmt = node(NodeKind::Statement);
      stmt->add(parseOpaque());
    }
    return stmt;
  }

  NodePtr parseStatementBody() {
    if (atSymbol("{")) return parseBlock();
    if (atKeyword("if")) {
      NodePtr s = node(NodeKind::IfStatement);
      s->add(take());
      s->add(expect("("));
      s->add(parseExpression());
      s->add(expect(")"));
      s->add(parseStatement());
      if (atKeyword("else")) {
        s->add(take());
        s->add(parseStatement());
      }
      return s;
    }
    if (atKeyword("for")) {
      NodePtr s = node(NodeKind::ForStatement);
      s->add(take());
      s->add(expect("("));
      if (atSymbol(";")) {
        s->add(take());
      } else {
        s->add(parseSimpleStatement());
      }
      if (!atSymbol(";")) s->add(parseExpression());
      s->add(expect(";"));
      if (!atSymbol(")")) s->add(parseExpression());
      s->add(expect(")"));
      s->add(parseStatement());
      return s;
    }
    if (atKeyword("while")) {
      NodePtr s = node(NodeKind::WhileStatement);
      s->add(take());
      s->add(expect("("));
      s->add(parseExpression());
      s->add(expect(")"));
      s->add(parseStatement());
      return s;
    }
    if (atKeyword("do")) {
      NodePtr s = node(NodeKind::DoWhileStatement);
      s->add(take());
      s->add(parseStatement());
      s->add(expect("while"));
      s->add(expect("("));
      s->add(parseExpression());
      s->add(expect(")"));
      s->add(expect(";"));
      return s;
    }
    if (atKeyword("return")) {
      NodePtr s = node(NodeKind::ReturnStatement);
      s->add(take());
      if (!atSymbol(";")) s->add(parseExpression());
      s->add(expect(";"));
      return s;
    }
    if (atKeyword("emit")) {
      NodePtr s = node(NodeKind::EmitStatement);
      s->add(take());
      s->add(parseExpression());
      s->add(expect(";"));
      return s;
    }
    if (atKeyword("throw") || atKeyword("break") || atKeyword("continue")) {
      NodePtr s = node(atKeyword("throw")   ? NodeKind::ThrowStatement
                       : atKeyword("break") ? NodeKind::BreakStatement
                                            : NodeKind::ContinueStatement);
      s->add(take());
      s->add(expect(";"));
      return s;
    }
    if (atWord("_") && atSymbol(";", 1)) {
      NodePtr s = node(NodeKind::PlaceholderStatement);
      s->add(take());
      s->add(take());
      return s;
    }
    if (atKeyword("assembly") || atWord("try")) return parseOpaque();
    if (atWord("unchecked") && atSymbol("{", 1)) return parseBlock(take());
    return parseSimpleStatement();
  }

  NodePtr parseSimpleStatement() {
    NodePtr simple = node(NodeKind::SimpleStatement);
    if (auto decl = attempt([&] { return parseVariableDeclarationStatement(); })) {
      simple->add(std::move(*decl));
      return simple;
    }
    NodePtr expr = node(NodeKind::ExpressionStatement);
    expr->add(parseExpression());
    expr->add(expect(";"));
    simple->add(std::move(expr));
    return simple;
  }

  void parseDeclaredVariable(AstNode& into) {
    into.add(parseTypeName());
    while (atKeyword("memory") || atKeyword("storage") || atWord("calldata")) into.add(take());
    into.add(expectName(IdentRole::VariableDecl));
  }

  NodePtr parseVariableDeclarationStatement() {
    NodePtr decl = node(NodeKind::VariableDeclarationStatement);
    if (atKeyword("var")) {
      decl->add(take());
      if (atSymbol("(")) {
        decl->add(take());
        while (!atSymbol(")")) {
          if (atSymbol(",")) {
            decl->add(take());
          } else {
            decl->add(expectName(IdentRole::VariableDecl));
          }
        }
        decl->add(take());
      } else {
        decl->add(expectName(IdentRole::VariableDecl));
      }
    } else if (atSymbol("(")) {
      decl->add(take());
      while (!atSymbol(")")) {
        if (atSymbol(",")) {
          decl->add(take());
        } else {
          parseDeclaredVariable(*decl);
        }
      }
      decl->add(take());
    } else {
      parseDeclaredVariable(*decl);
    }
    if (atSymbol("=")) {
      decl->add(take());
      decl->add(parseExpression());
    }
    decl->add(expect(";"));
    return decl;
  }

  /// Consumes raw tokens up to a `;` at bracket depth zero, through a
  /// brace-delimited group (and any `catch`/`else` continuation), or up to an
  /// unmatched `}` which is left for the caller.
  NodePtr parseOpaque() {
    NodePtr opaque = node(NodeKind::OpaqueStatement);
    const int line = peekTok() ? peekTok()->line : 0;
    int depth = 0;
    while (!eof()) {
      if (depth == 0 && atSymbol("}")) break;
      const bool open = atSymbol("(") || atSymbol("[") || atSymbol("{");
      const bool closeBrace = atSymbol("}");
      const bool close = atSymbol(")") || atSymbol("]") || closeBrace;
      const bool semicolon = atSymbol(";");
      opaque->add(take());
      if (open) ++depth;
      if (close) depth = std::max(0, depth - 1);
      if (depth == 0 && semicolon) break;
      if (depth == 0 && closeBrace && !atWord("catch") && !atKeyword("else")) break;
    }
    if (opaque->empty()) fail("unexpected '}'");
    warn("line " + std::to_string(line) + ": unsupported construct kept as opaque statement");
    return opaque;
  }

  // ---- expressions -------------------------------------------------------

  NodePtr parseExpression() {
    NodePtr lhs = parseConditional();
    const Token* t = peekTok();
    if (t && t->kind == TokenKind::Operator && contains(kAssignmentOps, t->text)) {
      NodePtr e = node(NodeKind::Expression);
      e->add(std::move(lhs));
      e->add(take());
      e->add(parseExpression());
      return e;
    }
    return lhs;
  }

  NodePtr parseConditional() {
    NodePtr cond = parseBinary(1);
    if (!atSymbol("?")) return cond;
    NodePtr e = node(NodeKind::Expression);
    e->add(std::move(cond));
    e->add(take());
    e->add(parseExpression());
    e->add(expect(":"));
    e->add(parseExpression());
    return e;
  }

  NodePtr parseBinary(int minPrec) {
    NodePtr lhs = parseUnary();
    while (true) {
      const Token* t = peekTok();
      if (!t || t->kind != TokenKind::Operator) break;
      const int prec = binaryPrecedence(t->text);
      if (prec == 0 || prec < minPrec) break;
      const bool rightAssoc = t->text == "**";
      NodePtr e = node(NodeKind::Expression);
      e->add(std::move(lhs));
      e->add(take());
      e->add(parseBinary(rightAssoc ? prec : prec + 1));
      lhs = std::move(e);
    }
    return lhs;
  }

  NodePtr parseUnary() {
    if (atSymbol("!") || atSymbol("~") || atSymbol("-") || atSymbol("+") || atSymbol("++") ||
        atSymbol("--") || atKeyword("delete")) {
      NodePtr e = node(NodeKind::Expression);
      e->add(take());
      e->add(parseUnary());
      return e;
    }
    if (atKeyword("new")) {
      NodePtr e = node(NodeKind::Expression);
      e->add(take());
      e->add(parseTypeName());
      return parsePostfix(std::move(e));
    }
    return parsePostfix(parsePrimary());
  }

  void parseCallArguments(AstNode& into) {
    into.add(expect("("));
    if (atSymbol("{")) {
      into.add(take());
      while (!atSymbol("}")) {
        if (atSymbol(",")) {
          into.add(take());
          continue;
        }
        into.add(expectName(IdentRole::Member));
        into.add(expect(":"));
        into.add(parseExpression());
      }
      into.add(take());
    } else {
      while (!atSymbol(")")) {
        if (atSymbol(",")) {
          into.add(take());
          continue;
        }
        into.add(parseExpression());
        if (!atSymbol(",") && !atSymbol(")")) {
          fail(eof() ? std::string("unexpected end of input; expected ')'")
                     : "expected ',' or ')' but found '" + peekTok()->text + "'");
        }
      }
    }
    into.add(expect(")"));
  }

  NodePtr parsePostfix(NodePtr base) {
    while (!eof()) {
      if (atSymbol("[")) {
        NodePtr e = node(NodeKind::Expression);
        e->add(std::move(base));
        e->add(take());
        if (!atSymbol("]") && !atSymbol(":")) e->add(parseExpression());
        if (atSymbol(":")) {
          e->add(take());
          if (!atSymbol("]")) e->add(parseExpression());
        }
        e->add(expect("]"));
        base = std::move(e);
      } else if (atSymbol(".")) {
        NodePtr e = node(NodeKind::Expression);
        e->add(std::move(base));
        e->add(take());
        const Token* member = peekTok();
        if (!member || (member->kind != TokenKind::Identifier && member->kind != TokenKind::Keyword)) {
          fail("expected member name after '.'");
        }
        e->add(take(IdentRole::Member));
        base = std::move(e);
      } else if (atSymbol("(")) {
        NodePtr e = node(NodeKind::Expression);
        e->add(std::move(base));
        parseCallArguments(*e);
        base = std::move(e);
      } else if (atSymbol("{") && atName(1) && atSymbol(":", 2)) {
        NodePtr e = node(NodeKind::Expression);
        e->add(std::move(base));
        e->add(take());
        while (!atSymbol("}")) {
          if (atSymbol(",")) {
            e->add(take());
            continue;
          }
          e->add(expectName(IdentRole::Member));
          e->add(expect(":"));
          e->add(parseExpression());
        }
        e->add(take());
        base = std::move(e);
      } else if (atSymbol("++") || atSymbol("--")) {
        NodePtr e = node(NodeKind::Expression);
        e->add(std::move(base));
        e->add(take());
        base = std::move(e);
      } else {
        break;
      }
    }
    return base;
  }

  NodePtr parsePrimary() {
    const Token* t = peekTok();
    if (!t) fail("unexpected end of input; expected expression");
    NodePtr e = node(NodeKind::Expression);
    switch (t->kind) {
      case TokenKind::DecimalNumber:
      case TokenKind::HexNumber:
        e->add(take());
        if (peekTok() && peekTok()->kind == TokenKind::Keyword && contains(kUnits, peekTok()->text)) {
          e->add(take());
        }
        return e;
      case TokenKind::StringLiteral:
        while (peekTok() && peekTok()->kind == TokenKind::StringLiteral) e->add(take());
        return e;
      case TokenKind::BoolLiteral:
        e->add(take());
        return e;
      default:
        break;
    }
    if (atWord("type") && atSymbol("(", 1)) {
      e->add(take());
      e->add(take());
      e->add(parseTypeName());
      e->add(expect(")"));
      return e;
    }
    if (atName()) {
      e->add(take(IdentRole::VariableRef));
      return e;
    }
    if (t->kind == TokenKind::Keyword && (isElementaryTypeName(t->text) || t->text == "payable")) {
      e->add(take());
      return e;
    }
    if (atSymbol("(")) {
      e->add(take());
      while (!atSymbol(")")) {
        if (atSymbol(",")) {
          e->add(take());
        } else {
          e->add(parseExpression());
          if (!atSymbol(",") && !atSymbol(")")) {
            fail(eof() ? std::string("unexpected end of input; expected ')'")
                       : "expected ',' or ')' but found '" + peekTok()->text + "'");
          }
        }
      }
      e->add(take());
      return e;
    }
    if (atSymbol("[")) {
      e->add(take());
      while (!atSymbol("]")) {
        if (atSymbol(",")) {
          e->add(take());
        } else {
          e->add(parseExpression());
          if (!atSymbol(",") && !atSymbol("]")) {
            fail(eof() ? std::string("unexpected end of input; expected ']'")
                       : "expected ',' or ']' but found '" + peekTok()->text + "'");
          }
        }
      }
      e->add(take());
      return e;
    }
    fail("expected expression but found '" + t->text + "'");
  }

  std::span<const Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string>* warnings_;
};

}  // namespace

AstNode parse(std::span<const Token> tokens, std::vector<std::string>* warnings) {
  return Parser(tokens, warnings).run();
}

ParsedSource parseSource(std::string_view source, std::string sourceRef) {
  ParsedSource parsed;
  parsed.sourceRef = std::move(sourceRef);
  parsed.tokens = tokenizeCode(source);
  parsed.root = parse(parsed.tokens, &parsed.warnings);
  return parsed;
}

}  // namespace smartembed::frontend
