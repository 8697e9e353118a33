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

#include "smartembed/frontend/normalizer.hpp"

#include "smartembed/frontend/ast.hpp"
#include "smartembed/frontend/serializer.hpp"

namespace smartembed::frontend {

bool isStructuralToken(std::string_view token) noexcept {
  for (int k = 0; k <= static_cast<int>(NodeKind::Expression); ++k) {
    if (nodeKindName(static_cast<NodeKind>(k)) == token) return true;
  }
  return false;
}

namespace {

bool isDroppedPunctuation(std::string_view text) { return text == ";" || text == ","; }

TokenDocument emptyLike(const TokenDocument& doc) {
  TokenDocument out;
  out.id = doc.id;
  out.granularity = doc.granularity;
  out.sourceRef = doc.sourceRef;
  return out;
}

}  // namespace

TokenDocument normalize(const TokenDocument& doc, const Bindings& bindings) {
  if (doc.tags.size() != doc.tokens.size()) return normalize(doc);

  TokenDocument out = emptyLike(doc);
  out.tokens.reserve(doc.tokens.size());
  out.tags.reserve(doc.tokens.size());
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const std::string& text = doc.tokens[i];
    const TokenTag& tag = doc.tags[i];
    TokenTag outTag{TokenOrigin::Canonical, tag.kind, tag.ordinal};

    switch (tag.origin) {
      case TokenOrigin::Structural:
      case TokenOrigin::Canonical:
        out.tokens.push_back(text);
        out.tags.push_back(tag);
        continue;
      case TokenOrigin::Synthesized:
        out.tokens.push_back(toLower(text));
        out.tags.push_back(outTag);
        continue;
      case TokenOrigin::Terminal:
        break;
    }

    if (isLiteral(tag.kind)) {
      out.tokens.emplace_back(literalPlaceholder(tag.kind));
    } else if (tag.ordinal != TokenTag::kNoOrdinal && bindings.isSimpleVariable(tag.ordinal)) {
      out.tokens.emplace_back(kSimpleVariableToken);
    } else if (tag.kind == TokenKind::Punctuation && isDroppedPunctuation(text)) {
      continue;
    } else {
      out.tokens.push_back(toLower(text));
    }
    out.tags.push_back(outTag);
  }
  return out;
}

TokenDocument normalize(const TokenDocument& doc) {
  TokenDocument out = emptyLike(doc);
  out.tokens.reserve(doc.tokens.size());
  for (const std::string& text : doc.tokens) {
    if (isDroppedPunctuation(text)) continue;
    out.tokens.push_back(isStructuralToken(text) ? text : toLower(text));
  }
  return out;
}

}  // namespace smartembed::frontend
