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

#include "smartembed/embedding/model_io.hpp"

#include <algorithm>
#include <fstream>

#include "embedding/model_access.hpp"
#include "smartembed/error.hpp"
#include "util/binary_io.hpp"

namespace smartembed::embedding {

namespace {

constexpr char kMagic[4] = {'S', 'E', 'M', 'B'};
constexpr std::uint64_t kMaxRows = 1ull << 32;

}  // namespace

void writeModel(const EmbeddingModel& model, std::ostream& out) {
  util::BinaryWriter w(out);
  w.bytes(kMagic, 4);
  w.u32(kModelFormatVersion);
  const HyperParams& p = model.params();
  w.u32(p.dim);
  w.u32(p.windowSize);
  w.u32(p.negativeSamples);
  w.u32(p.minCount);
  w.u32(p.ngramMin);
  w.u32(p.ngramMax);
  w.u32(p.bucketCount);
  w.u32(p.epochs);
  w.f64(p.initialLearningRate);
  w.u64(p.seed);

  w.u64(model.vocabSize());
  for (std::size_t i = 0; i < model.vocabSize(); ++i) {
    w.str(model.words()[i]);
    w.u64(model.counts()[i]);
  }
  const auto& wordRows = ModelAccess::wordRows(model);
  w.floats(wordRows.data(), wordRows.size());

  const auto& buckets = ModelAccess::ngramBuckets(model);
  const auto& ngramRows = ModelAccess::ngramRows(model);
  w.u64(buckets.size());
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    w.u32(buckets[i]);
    w.floats(ngramRows.data() + i * p.dim, p.dim);
  }
}

EmbeddingModel readModel(std::istream& in) {
  util::BinaryReader r(in, "model");
  char magic[4];
  r.bytes(magic, 4);
  if (!std::equal(magic, magic + 4, kMagic)) throw IoError("model: not a SmartEmbed model file");
  const std::uint32_t version = r.u32();
  if (version != kModelFormatVersion) throw FormatVersionMismatch(kModelFormatVersion, version);

  EmbeddingModel model;
  HyperParams& p = ModelAccess::params(model);
  p.dim = r.u32();
  p.windowSize = r.u32();
  p.negativeSamples = r.u32();
  p.minCount = r.u32();
  p.ngramMin = r.u32();
  p.ngramMax = r.u32();
  p.bucketCount = r.u32();
  p.epochs = r.u32();
  p.initialLearningRate = r.f64();
  p.seed = r.u64();
  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    throw IoError(std::string("model: corrupt header: ") + e.what());
  }
  if (p.dim > 1u << 16) throw IoError("model: corrupt dimension");

  const std::size_t n = r.count(r.u64(), kMaxRows);
  auto& words = ModelAccess::words(model);
  auto& counts = ModelAccess::counts(model);
  for (std::size_t i = 0; i < n; ++i) {
    words.push_back(r.str());
    counts.push_back(r.u64());
  }
  auto& wordRows = ModelAccess::wordRows(model);
  wordRows.resize(n * p.dim);
  r.floats(wordRows.data(), wordRows.size());

  const std::size_t m = r.count(r.u64(), p.bucketCount);
  auto& buckets = ModelAccess::ngramBuckets(model);
  auto& ngramRows = ModelAccess::ngramRows(model);
  buckets.resize(m);
  ngramRows.resize(m * p.dim);
  for (std::size_t i = 0; i < m; ++i) {
    buckets[i] = r.u32();
    if (buckets[i] >= p.bucketCount || (i > 0 && buckets[i] <= buckets[i - 1])) {
      throw IoError("model: corrupt n-gram bucket table");
    }
    r.floats(ngramRows.data() + i * p.dim, p.dim);
  }
  r.expectEnd();
  ModelAccess::reindex(model);
  return model;
}

void saveModel(const EmbeddingModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  writeModel(model, out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

EmbeddingModel loadModel(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return readModel(in);
}

}  // namespace smartembed::embedding
