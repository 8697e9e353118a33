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

#include <span>

namespace smartembed::simindex {

/// Euclidean norm accumulated in double.
double euclideanNorm(std::span<const float> v);

/// ‖a − b‖ / (‖a‖ + ‖b‖) in double, clamped to [0, 1]; 0 when both are zero.
/// Throws DimensionMismatch or NonFiniteInput.
double distance(std::span<const float> a, std::span<const float> b);

/// 1 − distance(a, b).
double similarity(std::span<const float> a, std::span<const float> b);

/// Same value as distance(a, b) given normA = euclideanNorm(a) and
/// normB = euclideanNorm(b); skips validation.
double distanceWithNorms(std::span<const float> a, double normA, std::span<const float> b,
                         double normB) noexcept;

/// Same value as similarity(a, b) given normA = euclideanNorm(a) and
/// normB = euclideanNorm(b); skips validation.
double similarityWithNorms(std::span<const float> a, double normA, std::span<const float> b,
                           double normB) noexcept;

}  // namespace smartembed::simindex
