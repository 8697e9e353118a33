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

#include "smartembed/embedding/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "smartembed/embedding/subwords.hpp"
#include "smartembed/error.hpp"

namespace smartembed::embedding {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

void initialRow(std::uint64_t seed, std::uint64_t table, std::uint64_t index, std::span<float> out) {
  std::uint64_t state = seed;
  state ^= splitmix64(state) ^ (table * 0xD6E8FEB86659FD93ull);
  state ^= splitmix64(state) ^ (index * 0xA0761D6478BD642Full);
  const double bound = 1.0 / static_cast<double>(out.size());
  for (float& v : out) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    v = static_cast<float>((2.0 * u - 1.0) * bound);
  }
}

std::optional<std::size_t> EmbeddingModel::wordIndex(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t EmbeddingModel::frequency(std::string_view token) const {
  const auto idx = wordIndex(token);
  return idx ? counts_[*idx] : 0;
}

std::span<const float> EmbeddingModel::wordRow(std::size_t index) const {
  if (index >= words_.size()) throw InvalidArgument("word index out of range");
  return {wordRows_.data() + index * dim(), dim()};
}

bool EmbeddingModel::hasStoredNgram(std::uint32_t bucket) const {
  return ngramSlot_.count(bucket) != 0;
}

std::vector<float> EmbeddingModel::ngramRow(std::uint32_t bucket) const {
  if (bucket >= params_.bucketCount) throw InvalidArgument("n-gram bucket out of range");
  std::vector<float> row(dim());
  const auto it = ngramSlot_.find(bucket);
  if (it != ngramSlot_.end()) {
    std::copy_n(ngramRows_.data() + it->second * dim(), dim(), row.begin());
  } else {
    initialRow(params_.seed, 1, bucket, row);
  }
  return row;
}

std::vector<std::uint32_t> EmbeddingModel::subwordBuckets(std::string_view token) const {
  return ngramBuckets(token, params_.ngramMin, params_.ngramMax, params_.bucketCount);
}

std::vector<float> EmbeddingModel::tokenVector(std::string_view token) const {
  const std::size_t d = dim();
  std::vector<double> acc(d, 0.0);
  std::vector<float> scratch(d);
  for (std::uint32_t bucket : subwordBuckets(token)) {
    const float* row;
    const auto it = ngramSlot_.find(bucket);
    if (it != ngramSlot_.end()) {
      row = ngramRows_.data() + it->second * d;
    } else {
      initialRow(params_.seed, 1, bucket, scratch);
      row = scratch.data();
    }
    for (std::size_t j = 0; j < d; ++j) acc[j] += row[j];
  }
  if (const auto idx = wordIndex(token)) {
    const float* row = wordRows_.data() + *idx * d;
    for (std::size_t j = 0; j < d; ++j) acc[j] += row[j];
  }
  std::vector<float> out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = static_cast<float>(acc[j]);
  return out;
}

bool EmbeddingModel::operator==(const EmbeddingModel& other) const {
  return params_ == other.params_ && words_ == other.words_ && counts_ == other.counts_ &&
         ngramBuckets_ == other.ngramBuckets_ &&
         std::equal(wordRows_.begin(), wordRows_.end(), other.wordRows_.begin(),
                    other.wordRows_.end(),
                    [](float a, float b) { return std::bit_cast<std::uint32_t>(a) ==
                                                  std::bit_cast<std::uint32_t>(b); }) &&
         std::equal(ngramRows_.begin(), ngramRows_.end(), other.ngramRows_.begin(),
                    other.ngramRows_.end(), [](float a, float b) {
                      return std::bit_cast<std::uint32_t>(a) == std::bit_cast<std::uint32_t>(b);
                    });
}

FragmentVector embedFragment(const EmbeddingModel& model, const frontend::TokenDocument& doc) {
  if (doc.tokens.empty()) throw EmptyDocument("document '" + doc.id + "' has no tokens");
  std::map<std::string_view, std::size_t> counts;
  for (const std::string& t : doc.tokens) ++counts[t];

  const std::size_t d = model.dim();
  std::vector<double> acc(d, 0.0);
  for (const auto& [token, n] : counts) {
    const std::vector<float> v = model.tokenVector(token);
    const double k = static_cast<double>(n);
    for (std::size_t j = 0; j < d; ++j) acc[j] += k * static_cast<double>(v[j]);
  }
  FragmentVector out;
  out.values.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    out.values[j] = static_cast<float>(acc[j]);
    if (!std::isfinite(out.values[j])) {
      throw NonFiniteInput("fragment '" + doc.id + "' embedding overflowed");
    }
  }
  out.sourceId = doc.id;
  out.granularity = doc.granularity;
  return out;
}

}  // namespace smartembed::embedding
