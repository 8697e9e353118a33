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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "smartembed/embedding/model.hpp"
#include "smartembed/frontend/document.hpp"

namespace smartembed::simindex {

struct RowMeta {
  std::string id;  // fragment id, or bug id for bug rows
  frontend::Granularity granularity = frontend::Granularity::Contract;
  std::string sourceRef;
  std::string label;  // contract name, or bug type for bug rows
  std::string link;   // external link, empty when unknown
  std::uint32_t lineCount = 0;

  bool operator==(const RowMeta&) const = default;
};

/// Row-stacked fragment vectors with per-row metadata. Immutable after build.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  /// Takes ownership of row-major `rows` (n × dim). `norms` are the stored
  /// float32 norms; when empty they are computed.
  EmbeddingMatrix(std::size_t dim, std::vector<float> rows, std::vector<RowMeta> meta,
                  std::vector<float> norms = {});

  std::size_t size() const noexcept { return meta_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return meta_.empty(); }

  std::span<const float> row(std::size_t i) const { return {rows_.data() + i * dim_, dim_}; }
  const RowMeta& meta(std::size_t i) const { return meta_.at(i); }
  const std::vector<RowMeta>& metas() const noexcept { return meta_; }
  float storedNorm(std::size_t i) const { return norms_.at(i); }
  /// Double-precision norm used by the search routines.
  double exactNorm(std::size_t i) const { return exactNorms_.at(i); }

  const std::vector<float>& rowData() const noexcept { return rows_; }
  const std::vector<float>& norms() const noexcept { return norms_; }

  bool operator==(const EmbeddingMatrix& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<float> rows_;
  std::vector<RowMeta> meta_;
  std::vector<float> norms_;
  std::vector<double> exactNorms_;
};

/// Stacks fragments in input order. `dim` is required for an empty list and
/// checked otherwise (0 = take it from the first fragment). Throws
/// DimensionMismatch, NonFiniteInput, or InvalidArgument when the meta count
/// differs.
EmbeddingMatrix buildMatrix(const std::vector<embedding::FragmentVector>& fragments,
                            std::vector<RowMeta> meta, std::size_t dim = 0);

}  // namespace smartembed::simindex
