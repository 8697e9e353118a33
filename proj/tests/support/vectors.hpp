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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "smartembed/simindex/matrix.hpp"
#include "smartembed/simindex/metric.hpp"
#include "smartembed/simindex/search.hpp"

namespace smartembed::testing::vectors {

/// Entries uniform in [-1, 1] times one scale drawn log-uniformly from [1e-6, 1e6].
inline std::vector<float> randomVector(std::mt19937_64& rng, std::size_t d, bool wideScale = true) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> exponent(-6.0, 6.0);
  const double scale = wideScale ? std::pow(10.0, exponent(rng)) : 1.0;
  std::vector<float> v(d);
  for (float& x : v) x = static_cast<float>(unit(rng) * scale);
  return v;
}

/// Independent long-double evaluation of the normalized Euclidean distance.
inline long double referenceDistance(const std::vector<float>& a, const std::vector<float>& b) {
  long double diff = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double x = a[i], y = b[i];
    diff += (x - y) * (x - y);
    na += x * x;
    nb += y * y;
  }
  const long double denom = std::sqrt(na) + std::sqrt(nb);
  return denom == 0 ? 0 : std::sqrt(diff) / denom;
}

/// Random matrix; when `duplicates` is set some rows repeat earlier rows exactly.
inline simindex::EmbeddingMatrix randomMatrix(std::mt19937_64& rng, std::size_t n, std::size_t d,
                                              bool duplicates) {
  std::vector<float> rows;
  std::vector<simindex::RowMeta> meta;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<float> v;
    if (duplicates && i > 0 && rng() % 4 == 0) {
      const std::size_t src = rng() % i;
      v.assign(rows.begin() + static_cast<std::ptrdiff_t>(src * d),
               rows.begin() + static_cast<std::ptrdiff_t>((src + 1) * d));
    } else {
      v = randomVector(rng, d, false);
    }
    rows.insert(rows.end(), v.begin(), v.end());
    simindex::RowMeta m;
    m.id = "row" + std::to_string(i);
    meta.push_back(m);
  }
  return simindex::EmbeddingMatrix(d, std::move(rows), std::move(meta));
}

/// Brute force: every similarity, full sort by (similarity desc, index asc).
inline std::vector<std::pair<std::size_t, double>> bruteForceRanking(
    const std::vector<float>& query, const simindex::EmbeddingMatrix& m) {
  std::vector<std::pair<std::size_t, double>> all;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::vector<float> row(m.row(i).begin(), m.row(i).end());
    all.emplace_back(i, simindex::similarity(query, row));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return all;
}

inline std::vector<std::pair<std::size_t, double>> asPairs(const std::vector<simindex::Match>& ms) {
  std::vector<std::pair<std::size_t, double>> out;
  for (const auto& m : ms) out.emplace_back(m.rowIndex, m.similarity);
  return out;
}

}  // namespace smartembed::testing::vectors
