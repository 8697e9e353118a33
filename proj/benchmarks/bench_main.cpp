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

#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smartembed/detect/detector.hpp"
#include "smartembed/embedding/trainer.hpp"
#include "smartembed/frontend/pipeline.hpp"
#include "smartembed/simindex/matrix.hpp"
#include "smartembed/simindex/metric.hpp"
#include "smartembed/simindex/search.hpp"

namespace {

using namespace smartembed;
namespace fs = std::filesystem;

std::vector<std::string> seedSources() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(fs::path(SMARTEMBED_SEED_DIR) / "corpus")) {
    if (e.path().extension() != ".sol") continue;
    std::ifstream in(e.path());
    std::ostringstream buf;
    buf << in.rdbuf();
    out.push_back(buf.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<float> randomVector(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> v(d);
  for (float& x : v) x = u(rng);
  return v;
}

simindex::EmbeddingMatrix randomMatrix(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(1);
  std::vector<float> rows;
  std::vector<simindex::RowMeta> meta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = randomVector(rng, d);
    rows.insert(rows.end(), v.begin(), v.end());
    meta[i].id = std::to_string(i);
  }
  return simindex::EmbeddingMatrix(d, std::move(rows), std::move(meta));
}

std::vector<frontend::TokenDocument> trainingDocs() {
  std::vector<frontend::TokenDocument> docs;
  for (const auto& s : seedSources()) {
    const auto a = frontend::analyzeSource(s);
    docs.push_back(frontend::contractDocument(a));
    for (auto& d : frontend::statementDocuments(a)) docs.push_back(std::move(d));
  }
  return docs;
}

const embedding::EmbeddingModel& model() {
  static const embedding::EmbeddingModel m = [] {
    embedding::HyperParams p;
    p.epochs = 2;
    return embedding::train(trainingDocs(), p);
  }();
  return m;
}

void BM_Distance(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto a = randomVector(rng, static_cast<std::size_t>(state.range(0)));
  const auto b = randomVector(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simindex::distance(a, b));
}
BENCHMARK(BM_Distance)->Arg(16)->Arg(100)->Arg(300);

void BM_TopK(benchmark::State& state) {
  const auto m = randomMatrix(static_cast<std::size_t>(state.range(0)), 100);
  std::mt19937_64 rng(4);
  const auto q = randomVector(rng, 100);
  for (auto _ : state) benchmark::DoNotOptimize(simindex::topK(q, m, 5));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TopK)->Arg(1000)->Arg(20000);

void BM_ClonePairs(benchmark::State& state) {
  const auto m = randomMatrix(static_cast<std::size_t>(state.range(0)), 100);
  for (auto _ : state) benchmark::DoNotOptimize(detect::detectClonePairs(m, 0.95));
}
BENCHMARK(BM_ClonePairs)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_ParseAndSerialize(benchmark::State& state) {
  const auto sources = seedSources();
  std::size_t bytes = 0;
  for (const auto& s : sources) bytes += s.size();
  for (auto _ : state) {
    for (const auto& s : sources) {
      const auto a = frontend::analyzeSource(s);
      benchmark::DoNotOptimize(frontend::contractDocument(a));
      benchmark::DoNotOptimize(frontend::statementDocuments(a));
    }
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * bytes));
}
BENCHMARK(BM_ParseAndSerialize);

void BM_EmbedContract(benchmark::State& state) {
  const auto doc = frontend::contractDocument(frontend::analyzeSource(seedSources().front()));
  const auto& m = model();
  for (auto _ : state) benchmark::DoNotOptimize(embedding::embedFragment(m, doc));
}
BENCHMARK(BM_EmbedContract);

void BM_TrainEpoch(benchmark::State& state) {
  const auto docs = trainingDocs();
  embedding::HyperParams p;
  p.epochs = 1;
  p.dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(embedding::train(docs, p));
}
BENCHMARK(BM_TrainEpoch)->Arg(32)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
