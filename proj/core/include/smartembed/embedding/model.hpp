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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "smartembed/embedding/hyper_params.hpp"
#include "smartembed/frontend/document.hpp"

namespace smartembed::embedding {

struct FragmentVector {
  std::vector<float> values;
  std::string sourceId;
  frontend::Granularity granularity = frontend::Granularity::Contract;
};

struct ModelAccess;

/// Trained word and n-gram vectors. N-gram rows are stored only for buckets
/// reached during training; every other bucket reads as its deterministic
/// initial value, so the logical table still has bucketCount rows.
/// Immutable once built; safe to share across threads.
class EmbeddingModel {
 public:
  EmbeddingModel() = default;

  const HyperParams& params() const noexcept { return params_; }
  std::size_t dim() const noexcept { return params_.dim; }
  std::size_t vocabSize() const noexcept { return words_.size(); }
  const std::vector<std::string>& words() const noexcept { return words_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  std::optional<std::size_t> wordIndex(std::string_view token) const;
  std::uint64_t frequency(std::string_view token) const;

  std::span<const float> wordRow(std::size_t index) const;
  /// Row for any bucket in [0, bucketCount).
  std::vector<float> ngramRow(std::uint32_t bucket) const;
  bool hasStoredNgram(std::uint32_t bucket) const;
  std::size_t storedNgramCount() const noexcept { return ngramBuckets_.size(); }

  std::vector<std::uint32_t> subwordBuckets(std::string_view token) const;

  /// Word row plus n-gram rows for vocab tokens, n-gram rows alone otherwise.
  /// Accumulated in double: n-grams in extraction order, word row last.
  std::vector<float> tokenVector(std::string_view token) const;

  bool operator==(const EmbeddingModel& other) const;

 private:
  friend struct ModelAccess;

  HyperParams params_;
  std::vector<std::string> words_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<float> wordRows_;
  std::vector<std::uint32_t> ngramBuckets_;  // ascending
  std::unordered_map<std::uint32_t, std::size_t> ngramSlot_;
  std::vector<float> ngramRows_;
};

/// Deterministic initial row: uniform in [-1/d, 1/d] from (seed, table, index).
void initialRow(std::uint64_t seed, std::uint64_t table, std::uint64_t index, std::span<float> out);

/// Sum of tokenVector over the document, multiplicity respected. Token
/// counts are accumulated in double over the sorted distinct tokens, so the
/// result does not depend on token order. Throws EmptyDocument.
FragmentVector embedFragment(const EmbeddingModel& model, const frontend::TokenDocument& doc);

}  // namespace smartembed::embedding
