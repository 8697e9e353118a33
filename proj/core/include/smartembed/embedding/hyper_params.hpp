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

#include <cstdint>

namespace smartembed::embedding {

struct HyperParams {
  std::uint32_t dim = 100;
  std::uint32_t windowSize = 5;
  std::uint32_t negativeSamples = 5;
  std::uint32_t minCount = 1;
  std::uint32_t ngramMin = 3;
  std::uint32_t ngramMax = 6;
  std::uint32_t bucketCount = 1u << 21;
  std::uint32_t epochs = 5;
  double initialLearningRate = 0.05;
  std::uint64_t seed = 42;

  /// Throws InvalidArgument naming the first bad field.
  void validate() const;

  bool operator==(const HyperParams&) const = default;
};

}  // namespace smartembed::embedding
