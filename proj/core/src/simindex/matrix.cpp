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

#include "smartembed/simindex/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "smartembed/error.hpp"
#include "smartembed/simindex/metric.hpp"

namespace smartembed::simindex {

EmbeddingMatrix::EmbeddingMatrix(std::size_t dim, std::vector<float> rows, std::vector<RowMeta> meta,
                                 std::vector<float> norms)
    : dim_(dim), rows_(std::move(rows)), meta_(std::move(meta)), norms_(std::move(norms)) {
  if (rows_.size() != meta_.size() * dim_) {
    throw InvalidArgument("matrix has " + std::to_string(rows_.size()) + " values for " +
                          std::to_string(meta_.size()) + " rows of dimension " + std::to_string(dim_));
  }
  for (float v : rows_) {
    if (!std::isfinite(v)) throw NonFiniteInput("matrix row contains a non-finite value");
  }
  exactNorms_.reserve(meta_.size());
  for (std::size_t i = 0; i < meta_.size(); ++i) exactNorms_.push_back(euclideanNorm(row(i)));
  if (norms_.empty()) {
    for (double n : exactNorms_) norms_.push_back(static_cast<float>(n));
  } else if (norms_.size() != meta_.size()) {
    throw InvalidArgument("norm count differs from row count");
  }
}

bool EmbeddingMatrix::operator==(const EmbeddingMatrix& other) const {
  auto bits = [](float a, float b) {
    return std::bit_cast<std::uint32_t>(a) == std::bit_cast<std::uint32_t>(b);
  };
  return dim_ == other.dim_ && meta_ == other.meta_ &&
         std::equal(rows_.begin(), rows_.end(), other.rows_.begin(), other.rows_.end(), bits) &&
         std::equal(norms_.begin(), norms_.end(), other.norms_.begin(), other.norms_.end(), bits);
}

EmbeddingMatrix buildMatrix(const std::vector<embedding::FragmentVector>& fragments,
                            std::vector<RowMeta> meta, std::size_t dim) {
  if (fragments.size() != meta.size()) {
    throw InvalidArgument("fragment count " + std::to_string(fragments.size()) +
                          " differs from meta count " + std::to_string(meta.size()));
  }
  if (dim == 0 && !fragments.empty()) dim = fragments.front().values.size();
  std::vector<float> rows;
  rows.reserve(fragments.size() * dim);
  for (const auto& f : fragments) {
    if (f.values.size() != dim) throw DimensionMismatch(dim, f.values.size());
    rows.insert(rows.end(), f.values.begin(), f.values.end());
  }
  return EmbeddingMatrix(dim, std::move(rows), std::move(meta));
}

}  // namespace smartembed::simindex
