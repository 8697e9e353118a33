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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace smartembed::embedding {

/// 32-bit FNV-1a, bytes sign-extended before mixing (the fastText variant).
std::uint32_t ngramHash(std::string_view s) noexcept;

/// Character n-grams of "<token>" with lengths in [minn, maxn], counted in
/// UTF-8 code points, in extraction order. Single-character n-grams touching
/// a boundary marker are skipped.
std::vector<std::string> characterNgrams(std::string_view token, std::uint32_t minn,
                                         std::uint32_t maxn);

/// Bucket index of each n-gram, `ngramHash(g) % bucketCount`, same order.
std::vector<std::uint32_t> ngramBuckets(std::string_view token, std::uint32_t minn,
                                        std::uint32_t maxn, std::uint32_t bucketCount);

}  // namespace smartembed::embedding
