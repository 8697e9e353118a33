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

#include "smartembed/embedding/hyper_params.hpp"
#include "smartembed/embedding/model.hpp"
#include "smartembed/frontend/document.hpp"

namespace smartembed::embedding {

struct TrainOptions {
  /// 1 is deterministic. More threads update shared rows without locks.
  std::size_t threads = 1;
};

struct TrainStats {
  std::vector<double> epochLoss;  // mean negative-sampling loss per (center, context) pair
  std::size_t tokenCount = 0;     // in-vocab training tokens per epoch
};

/// Skip-gram with negative sampling over each document's token sequence.
/// Throws EmptyCorpus when there are no tokens and DegenerateVocab when every
/// token falls below minCount.
EmbeddingModel train(const std::vector<frontend::TokenDocument>& corpus, const HyperParams& params,
                     const TrainOptions& options = {}, TrainStats* stats = nullptr);

}  // namespace smartembed::embedding
