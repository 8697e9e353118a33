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

#include "smartembed/simindex/metric.hpp"

#include <algorithm>
#include <cmath>

#include "smartembed/error.hpp"

namespace smartembed::simindex {

namespace {

void check(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i]) || !std::isfinite(b[i])) {
      throw NonFiniteInput("non-finite vector entry at index " + std::to_string(i));
    }
  }
}

}  // namespace

double euclideanNorm(std::span<const float> v) {
  double s = 0.0;
  for (float x : v) s += static_cast<double>(x) * static_cast<double>(x);
  return std::sqrt(s);
}

double distanceWithNorms(std::span<const float> a, double normA, std::span<const float> b,
                         double normB) noexcept {
  const double denom = normA + normB;
  if (denom == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    s += diff * diff;
  }
  return std::clamp(std::sqrt(s) / denom, 0.0, 1.0);
}

double similarityWithNorms(std::span<const float> a, double normA, std::span<const float> b,
                           double normB) noexcept {
  return 1.0 - distanceWithNorms(a, normA, b, normB);
}

double distance(std::span<const float> a, std::span<const float> b) {
  check(a, b);
  return distanceWithNorms(a, euclideanNorm(a), b, euclideanNorm(b));
}

double similarity(std::span<const float> a, std::span<const float> b) { return 1.0 - distance(a, b); }

}  // namespace smartembed::simindex
