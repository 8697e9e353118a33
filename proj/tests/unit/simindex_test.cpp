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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "smartembed/error.hpp"
#include "smartembed/simindex/matrix_io.hpp"
#include "support/vectors.hpp"

namespace smartembed::simindex {
namespace {

using testing::vectors::asPairs;
using testing::vectors::bruteForceRanking;
using testing::vectors::randomMatrix;
using testing::vectors::randomVector;
using testing::vectors::referenceDistance;

// ---------------------------------------------------------------- metric

TEST(Metric, AnalyticCases) {
  const std::vector<float> e1{1, 0, 0}, e2{0, 1, 0}, x{3, -4, 12}, minusX{-3, 4, -12}, zero{0, 0, 0};
  EXPECT_EQ(distance(x, x), 0.0);
  EXPECT_EQ(similarity(x, x), 1.0);
  EXPECT_NEAR(distance(x, minusX), 1.0, 1e-12);
  EXPECT_NEAR(similarity(x, minusX), 0.0, 1e-12);
  EXPECT_NEAR(distance(e1, e2), std::sqrt(2.0) / 2.0, 1e-12);
  EXPECT_NEAR(similarity(e1, e2), 1.0 - std::sqrt(2.0) / 2.0, 1e-12);
  EXPECT_EQ(distance(zero, zero), 0.0);
  EXPECT_EQ(similarity(zero, zero), 1.0);
  EXPECT_EQ(distance(zero, x), 1.0);
}

TEST(Metric, ScaleBehavior) {
  const std::vector<float> e{0.5f, -1.25f, 2.0f, 4.0f};
  for (double alpha : {1.0, 2.0, 0.5}) {
    std::vector<float> scaled;
    for (float v : e) scaled.push_back(static_cast<float>(alpha * v));
    EXPECT_NEAR(similarity(scaled, e), 1.0 - std::abs(alpha - 1.0) / (alpha + 1.0), 1e-12) << alpha;
  }
}

TEST(Metric, Errors) {
  const std::vector<float> a{1, 2}, b{1, 2, 3}, bad{1, NAN}, inf{INFINITY, 1};
  EXPECT_THROW(distance(a, b), DimensionMismatch);
  EXPECT_THROW(similarity(a, bad), NonFiniteInput);
  EXPECT_THROW(similarity(inf, a), NonFiniteInput);
}

TEST(Metric, RandomPairsProperties) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto a = randomVector(rng, 16);
    const auto b = randomVector(rng, 16);
    const double d = distance(a, b);
    ASSERT_GE(d, 0.0);
    ASSERT_LE(d, 1.0);
    ASSERT_EQ(similarity(a, b), 1.0 - d);
    ASSERT_EQ(similarity(a, b), similarity(b, a));
    ASSERT_EQ(distance(a, a), 0.0);
    ASSERT_NEAR(d, static_cast<double>(referenceDistance(a, b)), 1e-12);
    std::vector<float> minusA;
    for (float v : a) minusA.push_back(-v);
    ASSERT_NEAR(similarity(a, minusA), 0.0, 1e-12);
  }
}

TEST(Metric, RandomOrthonormalPairs) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    std::vector<float> a(16, 0.0f), b(16, 0.0f);
    const std::size_t p = rng() % 16;
    std::size_t q = rng() % 16;
    if (q == p) q = (q + 1) % 16;
    a[p] = (rng() & 1) ? 1.0f : -1.0f;
    b[q] = (rng() & 1) ? 1.0f : -1.0f;
    ASSERT_NEAR(similarity(a, b), 1.0 - std::sqrt(2.0) / 2.0, 1e-12);
  }
}

// ---------------------------------------------------------------- matrix

TEST(Matrix, BuildAlignsMetaAndNorms) {
  std::vector<embedding::FragmentVector> frags{{{3, 4}, "1_1", frontend::Granularity::Contract},
                                              {{0, 0}, "2_2", frontend::Granularity::Contract},
                                              {{1, 0}, "3_3", frontend::Granularity::Contract}};
  std::vector<RowMeta> meta(3);
  for (int i = 0; i < 3; ++i) meta[i].id = frags[i].sourceId;
  const EmbeddingMatrix m = buildMatrix(frags, meta);
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.dim(), 2u);
  EXPECT_EQ(m.meta(1).id, "2_2");
  EXPECT_EQ(m.storedNorm(0), 5.0f);
  EXPECT_EQ(m.storedNorm(1), 0.0f);
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_NEAR(m.storedNorm(i), euclideanNorm(m.row(i)), 1e-6 * (1 + m.storedNorm(i)));
  }
}

TEST(Matrix, EmptyMatrixReturnsNoMatches) {
  const EmbeddingMatrix m = buildMatrix({}, {}, 4);
  EXPECT_TRUE(m.empty());
  const std::vector<float> q{1, 2, 3, 4};
  EXPECT_TRUE(topK(q, m, 5).empty());
  EXPECT_TRUE(thresholdQuery(q, m, 0.0).empty());
}

TEST(Matrix, BuildErrors) {
  std::vector<embedding::FragmentVector> frags{{{1, 2}, "a", {}}, {{1, 2, 3}, "b", {}}};
  EXPECT_THROW(buildMatrix(frags, std::vector<RowMeta>(2)), DimensionMismatch);
  EXPECT_THROW(buildMatrix(frags, std::vector<RowMeta>(1)), InvalidArgument);
}

// ---------------------------------------------------------------- search

TEST(Search, SelfMatchFirst) {
  std::mt19937_64 rng(5);
  const EmbeddingMatrix m = randomMatrix(rng, 30, 8, false);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto best = topK(m.row(i), m, 1);
    ASSERT_EQ(best.size(), 1u);
    EXPECT_EQ(best[0].rowIndex, i);
    EXPECT_EQ(best[0].similarity, 1.0);
    EXPECT_EQ(best[0].meta.id, m.meta(i).id);
  }
}

TEST(Search, KLargerThanRows) {
  std::mt19937_64 rng(6);
  const EmbeddingMatrix m = randomMatrix(rng, 7, 4, false);
  EXPECT_EQ(topK(m.row(0), m, 100).size(), 7u);
  EXPECT_THROW(topK(m.row(0), m, 0), InvalidArgument);
}

TEST(Search, ThresholdEdges) {
  std::mt19937_64 rng(7);
  const EmbeddingMatrix m = randomMatrix(rng, 10, 4, false);
  EXPECT_EQ(thresholdQuery(m.row(3), m, 0.0).size(), 10u);
  const auto exact = thresholdQuery(m.row(3), m, 1.0);
  ASSERT_EQ(exact.size(), 1u);
  EXPECT_EQ(exact[0].rowIndex, 3u);
  EXPECT_THROW(thresholdQuery(m.row(3), m, 1.5), InvalidArgument);
  EXPECT_THROW(thresholdQuery(m.row(3), m, -0.1), InvalidArgument);
  const std::vector<float> wrong{1, 2};
  EXPECT_THROW(topK(wrong, m, 1), DimensionMismatch);
}

TEST(Search, DuplicateRowsTieByIndex) {
  const std::vector<float> v{1, 2, 3}, w{3, 2, 1};
  std::vector<float> rows;
  for (const auto* r : {&w, &v, &w, &v}) rows.insert(rows.end(), r->begin(), r->end());
  const EmbeddingMatrix m(3, rows, std::vector<RowMeta>(4));
  const auto result = topK(v, m, 4);
  ASSERT_EQ(result.size(), 4u);
  EXPECT_EQ(result[0].rowIndex, 1u);
  EXPECT_EQ(result[1].rowIndex, 3u);
  EXPECT_EQ(result[2].rowIndex, 0u);
  EXPECT_EQ(result[3].rowIndex, 2u);
}

TEST(Search, MatchesBruteForceOracle) {
  std::mt19937_64 rng(314);
  for (int instance = 0; instance < 100; ++instance) {
    const EmbeddingMatrix m = randomMatrix(rng, 50, 16, instance % 2 == 0);
    // Every third query duplicates a row so ties at the top are exercised.
    std::vector<float> query = randomVector(rng, 16, false);
    if (instance % 3 == 0) {
      const auto row = m.row(rng() % 50);
      query.assign(row.begin(), row.end());
    }
    ASSERT_EQ(query.size(), 16u);
    const auto oracle = bruteForceRanking(query, m);
    for (std::size_t k : {1u, 5u, 50u, 60u}) {
      const auto expected = std::vector(oracle.begin(), oracle.begin() + std::min<std::size_t>(k, 50));
      ASSERT_EQ(asPairs(topK(query, m, k)), expected) << instance << " k=" << k;
    }
    for (double delta : {0.0, 0.5, 0.6, 0.9, 1.0}) {
      std::vector<std::pair<std::size_t, double>> expected;
      for (const auto& p : oracle) {
        if (p.second >= delta) expected.push_back(p);
      }
      ASSERT_EQ(asPairs(thresholdQuery(query, m, delta)), expected) << instance << " d=" << delta;
    }
  }
}

// ---------------------------------------------------------------- persistence

TEST(MatrixIo, RoundTripBitExact) {
  std::mt19937_64 rng(8);
  EmbeddingMatrix m = randomMatrix(rng, 12, 16, true);
  std::vector<RowMeta> meta = m.metas();
  meta[2].label = "integer-overflow";
  meta[2].granularity = frontend::Granularity::Statement;
  meta[2].link = "";
  meta[3].link = "file:///tmp/x.sol";
  meta[3].lineCount = 42;
  m = EmbeddingMatrix(m.dim(), m.rowData(), meta);

  const auto path = std::filesystem::temp_directory_path() / "smartembed_matrix_roundtrip.bin";
  saveMatrix(m, path);
  const EmbeddingMatrix loaded = loadMatrix(path);
  std::filesystem::remove(path);
  EXPECT_TRUE(loaded == m);
  std::ostringstream a, b;
  writeMatrix(m, a);
  writeMatrix(loaded, b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(MatrixIo, TruncatedAndVersion) {
  std::mt19937_64 rng(9);
  const EmbeddingMatrix m = randomMatrix(rng, 5, 4, false);
  std::ostringstream out;
  writeMatrix(m, out);
  const std::string bytes = out.str();
  for (std::size_t cut = 0; cut < bytes.size(); cut += 7) {
    std::istringstream in(bytes.substr(0, cut));
    EXPECT_THROW(readMatrix(in), IoError) << cut;
  }
  std::string newer = bytes;
  newer[4] = 2;
  std::istringstream in(newer);
  EXPECT_THROW(readMatrix(in), FormatVersionMismatch);
}

TEST(MatrixIo, EmptyMatrixRoundTrip) {
  const EmbeddingMatrix m = buildMatrix({}, {}, 8);
  std::stringstream io;
  writeMatrix(m, io);
  const EmbeddingMatrix loaded = readMatrix(io);
  EXPECT_TRUE(loaded.empty());
  EXPECT_EQ(loaded.dim(), 8u);
}

}  // namespace
}  // namespace smartembed::simindex
