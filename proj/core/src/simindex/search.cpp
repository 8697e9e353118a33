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

#include "smartembed/simindex/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "smartembed/error.hpp"
#include "smartembed/simindex/metric.hpp"

namespace smartembed::simindex {

namespace {

void checkQuery(std::span<const float> query, const EmbeddingMatrix& m) {
  if (query.size() != m.dim() && !(m.empty() && m.dim() == 0)) {
    throw DimensionMismatch(m.dim(), query.size());
  }
  for (float v : query) {
    if (!std::isfinite(v)) throw NonFiniteInput("query vector contains a non-finite value");
  }
}

std::vector<Match> ranked(const std::vector<double>& sims, const EmbeddingMatrix& m,
                          std::vector<std::size_t> rows, std::size_t limit) {
  auto better = [&](std::size_t a, std::size_t b) {
    return sims[a] != sims[b] ? sims[a] > sims[b] : a < b;
  };
  limit = std::min(limit, rows.size());
  std::partial_sort(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(limit), rows.end(), better);
  std::vector<Match> out;
  out.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i) out.push_back({rows[i], sims[rows[i]], m.meta(rows[i])});
  return out;
}

}  // namespace

std::vector<double> similarities(std::span<const float> query, const EmbeddingMatrix& m) {
  checkQuery(query, m);
  const double qn = euclideanNorm(query);
  std::vector<double> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = similarityWithNorms(query, qn, m.row(i), m.exactNorm(i));
  return out;
}

std::vector<Match> topK(std::span<const float> query, const EmbeddingMatrix& m, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be at least 1");
  const std::vector<double> sims = similarities(query, m);
  std::vector<std::size_t> rows(m.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return ranked(sims, m, std::move(rows), k);
}

std::vector<Match> thresholdQuery(std::span<const float> query, const EmbeddingMatrix& m,
                                  double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw InvalidArgument("threshold must lie in [0, 1]");
  const std::vector<double> sims = similarities(query, m);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < sims.size(); ++i) {
    if (sims[i] >= delta) rows.push_back(i);
  }
  const std::size_t n = rows.size();
  return ranked(sims, m, std::move(rows), n);
}

}  // namespace smartembed::simindex
