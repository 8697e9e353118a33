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

#include "smartembed/embedding/trainer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <unordered_map>

#include "embedding/model_access.hpp"
#include "smartembed/embedding/subwords.hpp"
#include "smartembed/error.hpp"

namespace smartembed::embedding {

namespace {

constexpr std::size_t kNegativeTableSize = 1'000'000;
constexpr int kNegativeRetries = 16;

float sigmoid(float x) {
  x = std::clamp(x, -30.0f, 30.0f);
  return 1.0f / (1.0f + std::exp(-x));
}

struct Vocabulary {
  std::vector<std::string> words;
  std::vector<std::uint64_t> counts;
};

Vocabulary buildVocabulary(const std::vector<frontend::TokenDocument>& corpus,
                           std::uint32_t minCount) {
  std::unordered_map<std::string, std::uint64_t> freq;
  std::size_t total = 0;
  for (const auto& doc : corpus) {
    for (const std::string& t : doc.tokens) {
      ++freq[t];
      ++total;
    }
  }
  if (total == 0) throw EmptyCorpus("training corpus has no tokens");

  std::vector<std::pair<std::string, std::uint64_t>> kept;
  for (auto& [token, n] : freq) {
    if (n >= minCount) kept.emplace_back(token, n);
  }
  if (kept.empty()) {
    throw DegenerateVocab("all " + std::to_string(freq.size()) + " distinct tokens occur fewer than " +
                          std::to_string(minCount) + " times");
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  Vocabulary v;
  for (auto& [token, n] : kept) {
    v.words.push_back(std::move(token));
    v.counts.push_back(n);
  }
  return v;
}

std::vector<std::uint32_t> negativeTable(const std::vector<std::uint64_t>& counts,
                                         std::mt19937_64& rng) {
  double z = 0.0;
  for (std::uint64_t c : counts) z += std::pow(static_cast<double>(c), 0.75);
  std::vector<std::uint32_t> table;
  table.reserve(kNegativeTableSize + counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double share = std::pow(static_cast<double>(counts[i]), 0.75) / z;
    const auto n = static_cast<std::size_t>(std::ceil(share * kNegativeTableSize));
    table.insert(table.end(), n, static_cast<std::uint32_t>(i));
  }
  for (std::size_t i = table.size(); i > 1; --i) std::swap(table[i - 1], table[rng() % i]);
  return table;
}

class Trainer {
 public:
  Trainer(const HyperParams& params, EmbeddingModel& model,
          const std::vector<std::vector<std::uint32_t>>& sequences, std::size_t tokenCount)
      : p_(params), d_(params.dim), sequences_(sequences), tokenCount_(tokenCount) {
    auto& words = ModelAccess::words(model);
    auto& buckets = ModelAccess::ngramBuckets(model);
    float* wordRows = ModelAccess::wordRows(model).data();
    float* ngramRows = ModelAccess::ngramRows(model).data();
    inputs_.resize(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      inputs_[i].push_back(wordRows + i * d_);
      for (std::uint32_t b : model.subwordBuckets(words[i])) {
        const auto slot = std::lower_bound(buckets.begin(), buckets.end(), b) - buckets.begin();
        inputs_[i].push_back(ngramRows + static_cast<std::size_t>(slot) * d_);
      }
    }
    output_.assign(words.size() * d_, 0.0f);
    std::mt19937_64 rng(p_.seed);
    negatives_ = negativeTable(ModelAccess::counts(model), rng);
  }

  void run(std::size_t threads, TrainStats* stats) {
    threads = std::max<std::size_t>(1, std::min(threads, sequences_.size()));
    std::vector<std::vector<double>> loss(threads, std::vector<double>(p_.epochs, 0.0));
    std::vector<std::vector<std::size_t>> pairs(threads, std::vector<std::size_t>(p_.epochs, 0));
    auto work = [&](std::size_t tid) {
      const std::size_t begin = sequences_.size() * tid / threads;
      const std::size_t end = sequences_.size() * (tid + 1) / threads;
      worker(tid, begin, end, loss[tid], pairs[tid]);
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    if (stats) {
      stats->tokenCount = tokenCount_;
      stats->epochLoss.assign(p_.epochs, 0.0);
      for (std::uint32_t e = 0; e < p_.epochs; ++e) {
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t t = 0; t < threads; ++t) {
          sum += loss[t][e];
          n += pairs[t][e];
        }
        stats->epochLoss[e] = n ? sum / static_cast<double>(n) : 0.0;
      }
    }
  }

 private:
  void worker(std::size_t tid, std::size_t begin, std::size_t end, std::vector<double>& loss,
              std::vector<std::size_t>& pairs) {
    std::mt19937_64 rng(p_.seed + 0x9E3779B97F4A7C15ull * (tid + 1));
    std::size_t negPos = rng() % negatives_.size();
    std::vector<float> hidden(d_), grad(d_);
    const double totalWork = static_cast<double>(p_.epochs) * static_cast<double>(tokenCount_);

    for (std::uint32_t epoch = 0; epoch < p_.epochs; ++epoch) {
      for (std::size_t s = begin; s < end; ++s) {
        const auto& seq = sequences_[s];
        for (std::size_t w = 0; w < seq.size(); ++w) {
          const double done = static_cast<double>(processed_.fetch_add(1, std::memory_order_relaxed));
          const float lr = static_cast<float>(p_.initialLearningRate * std::max(0.0, 1.0 - done / totalWork));
          const auto& input = inputs_[seq[w]];
          const auto boundary = static_cast<std::ptrdiff_t>(1 + rng() % p_.windowSize);
          for (std::ptrdiff_t c = -boundary; c <= boundary; ++c) {
            const std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(w) + c;
            if (c == 0 || pos < 0 || pos >= static_cast<std::ptrdiff_t>(seq.size())) continue;
            loss[epoch] += update(input, seq[static_cast<std::size_t>(pos)], lr, negPos, hidden, grad);
            ++pairs[epoch];
          }
        }
      }
    }
  }

  double binaryLogistic(std::uint32_t target, bool label, float lr, const std::vector<float>& hidden,
                        std::vector<float>& grad) {
    float* out = output_.data() + static_cast<std::size_t>(target) * d_;
    float dot = 0.0f;
    for (std::size_t j = 0; j < d_; ++j) dot += out[j] * hidden[j];
    const float score = sigmoid(dot);
    const float alpha = lr * ((label ? 1.0f : 0.0f) - score);
    for (std::size_t j = 0; j < d_; ++j) grad[j] += alpha * out[j];
    for (std::size_t j = 0; j < d_; ++j) out[j] += alpha * hidden[j];
    const float prob = label ? score : 1.0f - score;
    return -std::log(std::max(prob, 1e-7f));
  }

  double update(const std::vector<float*>& input, std::uint32_t target, float lr, std::size_t& negPos,
                std::vector<float>& hidden, std::vector<float>& grad) {
    std::fill(hidden.begin(), hidden.end(), 0.0f);
    std::fill(grad.begin(), grad.end(), 0.0f);
    for (const float* row : input) {
      for (std::size_t j = 0; j < d_; ++j) hidden[j] += row[j];
    }
    double loss = binaryLogistic(target, true, lr, hidden, grad);
    for (std::uint32_t n = 0; n < p_.negativeSamples; ++n) {
      std::uint32_t neg = target;
      for (int attempt = 0; attempt < kNegativeRetries && neg == target; ++attempt) {
        neg = negatives_[negPos];
        negPos = (negPos + 1) % negatives_.size();
      }
      if (neg == target) continue;
      loss += binaryLogistic(neg, false, lr, hidden, grad);
    }
    // Each summed row takes an equal share of the gradient.
    const float share = 1.0f / static_cast<float>(input.size());
    for (float* row : input) {
      for (std::size_t j = 0; j < d_; ++j) row[j] += share * grad[j];
    }
    return loss;
  }

  const HyperParams& p_;
  const std::size_t d_;
  const std::vector<std::vector<std::uint32_t>>& sequences_;
  const std::size_t tokenCount_;
  std::vector<std::vector<float*>> inputs_;
  std::vector<float> output_;
  std::vector<std::uint32_t> negatives_;
  std::atomic<std::size_t> processed_{0};
};

}  // namespace

EmbeddingModel train(const std::vector<frontend::TokenDocument>& corpus, const HyperParams& params,
                     const TrainOptions& options, TrainStats* stats) {
  params.validate();
  Vocabulary vocab = buildVocabulary(corpus, params.minCount);

  EmbeddingModel model;
  ModelAccess::params(model) = params;
  ModelAccess::words(model) = vocab.words;
  ModelAccess::counts(model) = vocab.counts;
  const std::size_t d = params.dim;

  auto& wordRows = ModelAccess::wordRows(model);
  wordRows.resize(vocab.words.size() * d);
  for (std::size_t i = 0; i < vocab.words.size(); ++i) {
    initialRow(params.seed, 0, i, std::span<float>(wordRows.data() + i * d, d));
  }

  auto& buckets = ModelAccess::ngramBuckets(model);
  for (const std::string& w : vocab.words) {
    for (std::uint32_t b : ngramBuckets(w, params.ngramMin, params.ngramMax, params.bucketCount)) {
      buckets.push_back(b);
    }
  }
  std::sort(buckets.begin(), buckets.end());
  buckets.erase(std::unique(buckets.begin(), buckets.end()), buckets.end());
  auto& ngramRows = ModelAccess::ngramRows(model);
  ngramRows.resize(buckets.size() * d);
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    initialRow(params.seed, 1, buckets[i], std::span<float>(ngramRows.data() + i * d, d));
  }
  ModelAccess::reindex(model);

  std::vector<std::vector<std::uint32_t>> sequences;
  std::size_t tokenCount = 0;
  for (const auto& doc : corpus) {
    std::vector<std::uint32_t> seq;
    for (const std::string& t : doc.tokens) {
      if (const auto idx = model.wordIndex(t)) seq.push_back(static_cast<std::uint32_t>(*idx));
    }
    tokenCount += seq.size();
    if (!seq.empty()) sequences.push_back(std::move(seq));
  }

  Trainer trainer(params, model, sequences, tokenCount);
  trainer.run(options.threads, stats);
  return model;
}

}  // namespace smartembed::embedding
