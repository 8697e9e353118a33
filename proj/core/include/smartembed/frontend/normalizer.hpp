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

#include <string_view>

#include "smartembed/frontend/bindings.hpp"
#include "smartembed/frontend/document.hpp"

namespace smartembed::frontend {

inline constexpr std::string_view kSimpleVariableToken = "simplevar";

/// Erases differences that do not matter for clone matching:
///   - simple-variable identifiers become "simplevar";
///   - literals become "decimalnumber", "hexnumber", "stringliteral",
///     "boolliteral" or "versionliteral";
///   - ";" and "," are dropped;
///   - every other token is lowercased, except grammar-rule names which are
///     kept as written.
/// Idempotent.
TokenDocument normalize(const TokenDocument& doc, const Bindings& bindings);

/// Variant for untagged documents (read back from text): literal and
/// variable information is unavailable, so only punctuation removal and
/// lowercasing apply.
TokenDocument normalize(const TokenDocument& doc);

/// True if `token` spells a grammar-rule name ("sourceUnit", "block", ...).
bool isStructuralToken(std::string_view token) noexcept;

}  // namespace smartembed::frontend
