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

#include "smartembed/embedding/hyper_params.hpp"

#include <cmath>
#include <string>

#include "smartembed/error.hpp"

namespace smartembed::embedding {

namespace {

void require(bool ok, const char* field, const std::string& rule) {
  if (!ok) throw InvalidArgument(std::string("hyperparameter ") + field + " " + rule);
}

}  // namespace

void HyperParams::validate() const {
  require(dim > 0, "dim", "must be positive");
  require(windowSize > 0, "windowSize", "must be positive");
  require(negativeSamples > 0, "negativeSamples", "must be positive");
  require(ngramMin > 0, "ngramMin", "must be positive");
  require(ngramMin <= ngramMax, "ngramMin", "must not exceed ngramMax");
  require(bucketCount > 0, "bucketCount", "must be positive");
  require(epochs > 0, "epochs", "must be positive");
  require(std::isfinite(initialLearningRate) && initialLearningRate > 0, "initialLearningRate",
          "must be a positive finite number");
}

}  // namespace smartembed::embedding
