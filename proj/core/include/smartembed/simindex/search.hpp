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
#include <span>
#include <vector>

#include "smartembed/simindex/matrix.hpp"

namespace smartembed::simindex {

struct Match {
  std::size_t rowIndex = 0;
  double similarity = 0.0;
  RowMeta meta;

  bool operator==(const Match&) const = default;
};

/// The min(k, n) most similar rows, descending, ties by ascending row index.
/// Exact linear scan. Throws InvalidArgument for k = 0 and DimensionMismatch.
std::vector<Match> topK(std::span<const float> query, const EmbeddingMatrix& m, std::size_t k);

/// Every row with similarity ≥ delta, same order as topK. Throws
/// InvalidArgument when delta is outside [0, 1].
std::vector<Match> thresholdQuery(std::span<const float> query, const EmbeddingMatrix& m,
                                  double delta);

/// Similarity of the query to every row, in row order.
std::vector<double> similarities(std::span<const float> query, const EmbeddingMatrix& m);

}  // namespace smartembed::simindex
