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
#include <vector>

#include "smartembed/frontend/ast.hpp"

namespace smartembed::frontend {

/// Which token ordinals name a simple variable (state variable, parameter,
/// return variable or local). Type, function, contract, event and member
/// names are never simple variables.
class Bindings {
 public:
  Bindings() = default;
  explicit Bindings(std::vector<bool> simpleVariable) : simple_(std::move(simpleVariable)) {}

  bool isSimpleVariable(std::size_t ordinal) const noexcept {
    return ordinal < simple_.size() && simple_[ordinal];
  }
  std::size_t simpleVariableCount() const noexcept;

 private:
  std::vector<bool> simple_;
};

/// A declared variable's name counts everywhere it is written. A reference
/// counts when its name is declared in the enclosing function (parameters,
/// returns, locals) or as a state variable of the enclosing contract or of a
/// base contract defined in the same source unit.
Bindings resolveBindings(const AstNode& sourceUnit, std::size_t tokenCount);

}  // namespace smartembed::frontend
