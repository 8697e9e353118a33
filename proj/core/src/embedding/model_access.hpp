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

#include "smartembed/embedding/model.hpp"

namespace smartembed::embedding {

struct ModelAccess {
  static HyperParams& params(EmbeddingModel& m) { return m.params_; }
  static std::vector<std::string>& words(EmbeddingModel& m) { return m.words_; }
  static std::vector<std::uint64_t>& counts(EmbeddingModel& m) { return m.counts_; }
  static std::vector<float>& wordRows(EmbeddingModel& m) { return m.wordRows_; }
  static std::vector<std::uint32_t>& ngramBuckets(EmbeddingModel& m) { return m.ngramBuckets_; }
  static std::vector<float>& ngramRows(EmbeddingModel& m) { return m.ngramRows_; }
  static const std::vector<float>& wordRows(const EmbeddingModel& m) { return m.wordRows_; }
  static const std::vector<std::uint32_t>& ngramBuckets(const EmbeddingModel& m) {
    return m.ngramBuckets_;
  }
  static const std::vector<float>& ngramRows(const EmbeddingModel& m) { return m.ngramRows_; }

  /// Rebuilds lookup tables after the vectors above are filled in.
  static void reindex(EmbeddingModel& m) {
    m.index_.clear();
    for (std::size_t i = 0; i < m.words_.size(); ++i) m.index_.emplace(m.words_[i], i);
    m.ngramSlot_.clear();
    for (std::size_t i = 0; i < m.ngramBuckets_.size(); ++i) m.ngramSlot_.emplace(m.ngramBuckets_[i], i);
  }
};

}  // namespace smartembed::embedding
