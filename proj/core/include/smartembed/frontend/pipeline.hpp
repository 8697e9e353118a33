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

#include "smartembed/frontend/bindings.hpp"
#include "smartembed/frontend/document.hpp"
#include "smartembed/frontend/parser.hpp"
#include "smartembed/frontend/serializer.hpp"

namespace smartembed::frontend {

/// Parsed source plus its resolved bindings; the unit every downstream
/// stage starts from.
struct AnalyzedSource {
  ParsedSource parsed;
  Bindings bindings;
};

AnalyzedSource analyzeSource(std::string_view source, std::string sourceRef = {});

/// Normalized whole-file document. Throws EmptyContract for a file with no code.
TokenDocument contractDocument(const AnalyzedSource& source);

/// Normalized document per statement unit, in source order.
std::vector<TokenDocument> statementDocuments(const AnalyzedSource& source);

struct SourceCounts {
  std::size_t subcontracts = 0;
  std::size_t functions = 0;
  std::size_t statements = 0;
};

SourceCounts countEntities(const AstNode& sourceUnit);

}  // namespace smartembed::frontend
