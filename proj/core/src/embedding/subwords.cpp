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

#include "smartembed/embedding/subwords.hpp"

namespace smartembed::embedding {

std::uint32_t ngramHash(std::string_view s) noexcept {
  std::uint32_t h = 2166136261u;
  for (char c : s) {
    h ^= static_cast<std::uint32_t>(static_cast<std::int8_t>(c));
    h *= 16777619u;
  }
  return h;
}

namespace {

bool continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }

}  // namespace

std::vector<std::string> characterNgrams(std::string_view token, std::uint32_t minn,
                                         std::uint32_t maxn) {
  std::vector<std::string> out;
  if (maxn == 0) return out;
  const std::string word = "<" + std::string(token) + ">";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (continuation(word[i])) continue;
    std::string ngram;
    for (std::size_t j = i, n = 1; j < word.size() && n <= maxn; ++n) {
      ngram.push_back(word[j++]);
      while (j < word.size() && continuation(word[j])) ngram.push_back(word[j++]);
      if (n >= minn && !(n == 1 && (i == 0 || j == word.size()))) out.push_back(ngram);
    }
  }
  return out;
}

std::vector<std::uint32_t> ngramBuckets(std::string_view token, std::uint32_t minn,
                                        std::uint32_t maxn, std::uint32_t bucketCount) {
  std::vector<std::uint32_t> out;
  if (bucketCount == 0) return out;
  for (const std::string& g : characterNgrams(token, minn, maxn)) {
    out.push_back(ngramHash(g) % bucketCount);
  }
  return out;
}

}  // namespace smartembed::embedding
