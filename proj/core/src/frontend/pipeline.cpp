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

#include "smartembed/frontend/pipeline.hpp"

#include "smartembed/frontend/normalizer.hpp"

namespace smartembed::frontend {

AnalyzedSource analyzeSource(std::string_view source, std::string sourceRef) {
  AnalyzedSource out;
  out.parsed = parseSource(source, std::move(sourceRef));
  out.bindings = resolveBindings(out.parsed.root, out.parsed.tokens.size());
  return out;
}

TokenDocument contractDocument(const AnalyzedSource& source) {
  return normalize(serializeContract(source.parsed.root, source.parsed.sourceRef), source.bindings);
}

std::vector<TokenDocument> statementDocuments(const AnalyzedSource& source) {
  std::vector<TokenDocument> docs;
  for (const StatementSite& site : collectStatements(source.parsed.root)) {
    docs.push_back(normalize(
        serializeStatement(*site.statement, site.context, source.parsed.sourceRef), source.bindings));
  }
  return docs;
}

SourceCounts countEntities(const AstNode& sourceUnit) {
  SourceCounts counts;
  sourceUnit.forEachNode([&](const AstNode& node) {
    if (node.kind() == NodeKind::ContractDefinition) ++counts.subcontracts;
    if (node.kind() == NodeKind::FunctionDefinition) ++counts.functions;
  });
  counts.statements = collectStatements(sourceUnit).size();
  return counts;
}

}  // namespace smartembed::frontend
