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

// Acceptance runner: one PASS/FAIL line per primary criterion. Exit status is
// the number of failed criteria, so ctest fails when any line says FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "smartembed/corpus/index.hpp"
#include "smartembed/corpus/manifest.hpp"
#include "smartembed/detect/detector.hpp"
#include "smartembed/embedding/model_io.hpp"
#include "smartembed/embedding/trainer.hpp"
#include "smartembed/frontend/normalizer.hpp"
#include "smartembed/frontend/pipeline.hpp"
#include "smartembed/service/service.hpp"
#include "smartembed/simindex/matrix_io.hpp"
#include "smartembed/simindex/metric.hpp"
#include "smartembed/simindex/search.hpp"
#include "support/corpora.hpp"
#include "support/detection.hpp"
#include "support/fixtures.hpp"
#include "support/vectors.hpp"

namespace smartembed {
namespace {

namespace fs = std::filesystem;
namespace det = testing::detection;
using json = nlohmann::json;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (problems.size() < 8) problems.push_back(what);
    }
  }
};

struct Criterion {
  std::string name;
  double budgetSeconds;
  std::function<void(Outcome&)> body;
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

// ------------------------------------------------------------ criteria

void goldenSerialization(Outcome& o) {
  const frontend::ParsedSource parsed = frontend::parseSource(testing::fixtures::kOverflowExample);
  const std::string contract = frontend::formatDocumentLine(frontend::serializeContract(parsed.root));
  o.expect(contract == testing::fixtures::kOverflowContractStream, "contract stream: " + contract);

  std::string line8;
  for (const auto& site : frontend::collectStatements(parsed.root)) {
    const frontend::TokenDocument d = frontend::serializeStatement(*site.statement, site.context);
    if (d.startLine() == 8) line8 = frontend::formatDocumentLine(d);
  }
  o.expect(line8 == testing::fixtures::kOverflowStatementStream, "statement stream: " + line8);
  o.detail = "1_10 and 8_8 byte-exact";
}

void goldenNormalization(Outcome& o) {
  const frontend::AnalyzedSource src = frontend::analyzeSource(testing::fixtures::kOverflowExample);
  const frontend::AstNode& contract = *src.parsed.root.childNodes()[1];
  const frontend::AstNode& stateVar = *contract.childNodes()[0]->childNodes()[0];
  const frontend::TokenDocument raw = frontend::serializeFragment(stateVar, frontend::Granularity::Statement);
  const std::string normalized = frontend::normalize(raw, src.bindings).joined();
  o.expect(raw.joined() == "uint private r = 0 ;", "raw fragment: " + raw.joined());
  o.expect(normalized == "uint private simplevar = decimalnumber", "normalized: " + normalized);
  o.detail = "\"" + normalized + "\"";
}

void metricSuite(Outcome& o) {
  std::mt19937_64 rng(20260101);
  double worstAntipodal = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = testing::vectors::randomVector(rng, 16);
    const auto b = testing::vectors::randomVector(rng, 16);
    const double d = simindex::distance(a, b);
    o.expect(d >= 0.0 && d <= 1.0, "distance out of range at pair " + std::to_string(i));
    o.expect(simindex::similarity(a, b) == 1.0 - d, "similarity != 1 - distance at pair " + std::to_string(i));
    o.expect(simindex::distance(b, a) == d, "asymmetric at pair " + std::to_string(i));
    o.expect(simindex::distance(a, a) == 0.0, "d(x,x) != 0 at pair " + std::to_string(i));
    std::vector<float> minusA;
    for (float v : a) minusA.push_back(-v);
    const double anti = std::abs(simindex::similarity(a, minusA));
    worstAntipodal = std::max(worstAntipodal, anti);
    o.expect(anti <= 1e-12, "antipodal similarity " + std::to_string(anti));

    // signed standard basis vectors are exactly orthonormal in float
    std::vector<float> e(16, 0.0f), f(16, 0.0f);
    const std::size_t p = rng() % 16;
    const std::size_t q = (p + 1 + rng() % 15) % 16;
    e[p] = (rng() & 1) ? 1.0f : -1.0f;
    f[q] = (rng() & 1) ? 1.0f : -1.0f;
    o.expect(std::abs(simindex::similarity(e, f) - (1.0 - std::sqrt(2.0) / 2.0)) <= 1e-12,
             "orthonormal pair off by more than 1e-12");
  }
  o.detail = "1000 pairs, worst antipodal |s| = " + fmt(worstAntipodal, 17);
}

/// The metric from its definition, written out independently of the library.
double oracleSimilarity(const std::vector<float>& a, std::span<const float> b) {
  double aa = 0, bb = 0, diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    aa += double(a[i]) * double(a[i]);
    bb += double(b[i]) * double(b[i]);
    const double t = double(a[i]) - double(b[i]);
    diff += t * t;
  }
  const double denom = std::sqrt(aa) + std::sqrt(bb);
  return denom == 0.0 ? 1.0 : 1.0 - std::clamp(std::sqrt(diff) / denom, 0.0, 1.0);
}

void searchOracle(Outcome& o) {
  std::mt19937_64 rng(77);
  std::size_t ties = 0;
  for (int instance = 0; instance < 100; ++instance) {
    const simindex::EmbeddingMatrix m = testing::vectors::randomMatrix(rng, 50, 16, instance % 2 == 0);
    std::vector<float> query = testing::vectors::randomVector(rng, 16, false);
    if (instance % 3 == 0) {
      const auto row = m.row(rng() % 50);
      query.assign(row.begin(), row.end());
    }
    std::vector<std::pair<std::size_t, double>> oracle;
    for (std::size_t i = 0; i < m.size(); ++i) oracle.emplace_back(i, oracleSimilarity(query, m.row(i)));
    std::stable_sort(oracle.begin(), oracle.end(),
                     [](const auto& x, const auto& y) { return x.second > y.second; });
    for (std::size_t i = 1; i < oracle.size(); ++i) ties += oracle[i].second == oracle[i - 1].second;

    for (std::size_t k : {1u, 5u, 10u, 50u, 60u}) {
      const auto expected = std::vector(oracle.begin(), oracle.begin() + std::min<std::size_t>(k, 50));
      o.expect(testing::vectors::asPairs(simindex::topK(query, m, k)) == expected,
               "topK mismatch, instance " + std::to_string(instance) + " k=" + std::to_string(k));
    }
    for (double delta : {0.0, 0.3, 0.5, 0.7, 0.9, 1.0}) {
      std::vector<std::pair<std::size_t, double>> expected;
      for (const auto& p : oracle) {
        if (p.second >= delta) expected.push_back(p);
      }
      o.expect(testing::vectors::asPairs(simindex::thresholdQuery(query, m, delta)) == expected,
               "thresholdQuery mismatch, instance " + std::to_string(instance) + " delta=" + fmt(delta, 2));
    }
  }
  o.expect(ties > 0, "no tie cases exercised");
  o.detail = "100 instances, " + std::to_string(ties) + " tied neighbours";
}

void type2Clones(Outcome& o) {
  const auto files = det::fixtureFiles();
  std::vector<frontend::TokenDocument> docs;
  std::vector<frontend::AnalyzedSource> analyzed;
  for (const auto& f : files) {
    analyzed.push_back(frontend::analyzeSource(det::readText(det::fixtureDir() / f), f));
    docs.push_back(frontend::contractDocument(analyzed.back()));
    for (auto& d : frontend::statementDocuments(analyzed.back())) docs.push_back(std::move(d));
  }
  o.expect(files.size() == 10, "expected 10 fixture contracts, found " + std::to_string(files.size()));
  o.expect(docs.size() <= 200, "training corpus has " + std::to_string(docs.size()) + " documents");

  embedding::HyperParams p;
  p.dim = 32;
  p.epochs = 3;
  p.seed = 5;
  const embedding::EmbeddingModel model = embedding::train(docs, p);

  std::vector<embedding::FragmentVector> rows;
  std::vector<simindex::RowMeta> metas;
  for (std::size_t i = 0; i < files.size(); ++i) {
    rows.push_back(embedding::embedFragment(model, frontend::contractDocument(analyzed[i])));
    simindex::RowMeta m;
    m.id = files[i];
    m.sourceRef = files[i];
    m.label = files[i];
    metas.push_back(m);
  }
  const simindex::EmbeddingMatrix corpus = simindex::buildMatrix(rows, metas, model.dim());

  std::size_t ok = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string original = det::readText(det::fixtureDir() / files[i]);
    const std::string variant =
        det::perturbLiterals(det::alphaRename(original, det::fixtureVariables().at(files[i]), "v2"));
    o.expect(variant != original, files[i] + ": variant identical to original");
    const detect::CloneReport r = detect::findClones(variant, corpus, model, 1);
    const bool hit = !r.matches.empty() && r.matches[0].rowIndex == i && r.matches[0].similarity == 1.0;
    o.expect(hit, files[i] + ": top match " +
                      (r.matches.empty() ? std::string("none")
                                         : r.matches[0].sourceRef + " at " + fmt(r.matches[0].similarity, 17)));
    ok += hit;
  }
  o.detail = std::to_string(ok) + "/10 variants rank 1 at similarity 1.0 (" + std::to_string(docs.size()) +
             " training documents, d=32, 3 epochs)";
}

void seededBugs(Outcome& o) {
  const corpus::IndexArtifacts& art = det::seededArtifacts();
  const simindex::EmbeddingMatrix& bugMatrix = *art.bugMatrix;
  const detect::BugDatabase& db = *art.bugs;
  std::set<std::string> types;
  for (const auto& r : db.records()) types.insert(r.bugType);
  o.expect(db.size() >= 10, "bug DB has " + std::to_string(db.size()) + " records");
  o.expect(types.size() >= 3, "bug DB covers " + std::to_string(types.size()) + " bug types");

  std::map<std::pair<std::string, int>, det::Planted> planted;
  std::size_t verbatim = 0;
  for (const auto& p : det::planted()) {
    planted[{p.file, p.line}] = p;
    verbatim += p.variant == "verbatim";
  }
  o.expect(planted.size() == 12 && verbatim == 6, "fixture must plant 6 verbatim + 6 renamed statements");

  constexpr double kTheta = 0.95;
  std::size_t found = 0, clean = 0, falsePositives = 0;
  double minPlanted = 1.0, maxClean = 0.0;
  for (const auto& file : det::fixtureFiles()) {
    const frontend::AnalyzedSource src = frontend::analyzeSource(det::readText(det::fixtureDir() / file), file);
    const detect::BugReport report = detect::detectBugs(src, bugMatrix, db, art.model, kTheta);
    std::map<int, const detect::BugFinding*> byLine;
    for (const auto& f : report.findings) byLine[f.startLine] = &f;

    for (const auto& doc : frontend::statementDocuments(src)) {
      // Oracle: best similarity over B computed in long double from raw vectors.
      const std::vector<float> q = embedding::embedFragment(art.model, doc).values;
      double best = -1.0;
      std::string bestId;
      for (std::size_t i = 0; i < bugMatrix.size(); ++i) {
        const std::vector<float> row(bugMatrix.row(i).begin(), bugMatrix.row(i).end());
        const double s = static_cast<double>(1.0L - testing::vectors::referenceDistance(q, row));
        if (s > best + 1e-12 || (std::abs(s - best) <= 1e-12 && bugMatrix.meta(i).id < bestId)) {
          best = s;
          bestId = bugMatrix.meta(i).id;
        }
      }
      const std::string where = file + ":" + std::to_string(doc.startLine());
      const auto it = planted.find({file, doc.startLine()});
      const auto hit = byLine.find(doc.startLine());
      if (it != planted.end()) {
        minPlanted = std::min(minPlanted, best);
        o.expect(best >= kTheta, where + " oracle similarity " + fmt(best, 6) + " below threshold");
        o.expect(bestId == it->second.bugId, where + " oracle best " + bestId + ", planted " + it->second.bugId);
        const bool reported = hit != byLine.end() && hit->second->bugId == it->second.bugId;
        o.expect(reported, where + " planted " + it->second.bugId + " not reported");
        if (reported) o.expect(std::abs(hit->second->similarity - best) <= 1e-9, where + " differs from oracle");
        found += reported;
      } else {
        ++clean;
        maxClean = std::max(maxClean, best);
        o.expect(best < kTheta, where + " clean statement oracle similarity " + fmt(best, 6));
        if (hit != byLine.end()) {
          ++falsePositives;
          o.expect(false, where + " clean statement reported as " + hit->second->bugId);
        }
      }
    }
  }
  o.expect(clean == 30, "fixture has " + std::to_string(clean) + " clean statements, expected 30");
  o.detail = "recall " + std::to_string(found) + "/12, false positives " + std::to_string(falsePositives) + "/" +
             std::to_string(clean) + ", min planted " + fmt(minPlanted) + ", max clean " + fmt(maxClean);
}

template <typename T>
bool isSubset(const std::set<T>& inner, const std::set<T>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void thresholdMonotonicity(Outcome& o) {
  const corpus::IndexArtifacts& art = det::seededArtifacts();
  std::vector<std::set<std::pair<std::size_t, std::size_t>>> pairSets;
  std::string sizes = "pairs";
  for (double delta : {0.80, 0.90, 0.95, 0.99}) {
    std::set<std::pair<std::size_t, std::size_t>> s;
    for (const auto& p : detect::detectClonePairs(art.corpus, delta).pairs) s.insert({p.first, p.second});
    sizes += " " + std::to_string(s.size());
    pairSets.push_back(std::move(s));
  }
  for (std::size_t i = 1; i < pairSets.size(); ++i) {
    o.expect(isSubset(pairSets[i], pairSets[i - 1]), "clone pair sets not nested at step " + std::to_string(i));
  }
  o.expect(!pairSets.front().empty(), "no clone pairs at 0.80; nesting is vacuous");

  using Key = std::tuple<std::string, int, std::string>;
  std::vector<std::set<Key>> bugSets;
  sizes += "; findings";
  for (double theta : {0.90, 0.95, 1.0}) {
    std::set<Key> s;
    for (const auto& file : det::fixtureFiles()) {
      const auto r = detect::detectBugs(det::readText(det::fixtureDir() / file), *art.bugMatrix, *art.bugs,
                                        art.model, theta, true);
      for (const auto& f : r.allMatches) s.insert({file, f.startLine, f.bugId});
    }
    sizes += " " + std::to_string(s.size());
    bugSets.push_back(std::move(s));
  }
  for (std::size_t i = 1; i < bugSets.size(); ++i) {
    o.expect(isSubset(bugSets[i], bugSets[i - 1]), "bug finding sets not nested at step " + std::to_string(i));
  }
  o.expect(!bugSets.back().empty(), "no findings at theta 1.0; nesting is vacuous");
  o.detail = sizes;
}

void trainingProgress(Outcome& o) {
  embedding::HyperParams p;
  p.dim = 16;
  p.windowSize = 2;
  p.epochs = 5;
  p.bucketCount = 1u << 16;
  p.seed = 11;
  embedding::TrainStats stats;
  const embedding::EmbeddingModel model = embedding::train(testing::corpora::coOccurrenceCorpus(), p, {}, &stats);
  o.expect(stats.epochLoss.size() == 5, "expected 5 epoch losses");
  o.expect(stats.epochLoss.back() < stats.epochLoss.front(), "loss did not decrease");

  const auto& cl = testing::corpora::clusters();
  auto sim = [&](const std::string& a, const std::string& b) {
    return simindex::similarity(model.tokenVector(a), model.tokenVector(b));
  };
  // 5 in-cluster pairs from each of the 4 clusters; 20 cross-cluster pairs.
  double together = 0, apart = 0;
  int nTogether = 0, nApart = 0;
  for (std::size_t c = 0; c < cl.size(); ++c) {
    for (std::size_t j = 0; j < 5; ++j) {
      together += sim(cl[c][j], cl[c][(j + 1) % 5]);
      ++nTogether;
      apart += sim(cl[c][j], cl[(c + 1) % cl.size()][(j + 2) % 5]);
      ++nApart;
    }
  }
  together /= nTogether;
  apart /= nApart;
  o.expect(nTogether == 20 && nApart == 20, "expected 20 + 20 pairs");
  o.expect(together > apart, "co-occurring mean " + fmt(together) + " <= never-co-occurring " + fmt(apart));
  o.detail = "loss " + fmt(stats.epochLoss.front()) + " -> " + fmt(stats.epochLoss.back()) + ", mean similarity " +
             fmt(together) + " vs " + fmt(apart);
}

std::string fileBytes(const fs::path& p) { return det::readText(p); }

void persistence(Outcome& o) {
  const fs::path dir = fs::temp_directory_path() / ("smartembed_accept_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const corpus::IndexArtifacts& art = det::seededArtifacts();

  embedding::saveModel(art.model, dir / "model.bin");
  const embedding::EmbeddingModel model = embedding::loadModel(dir / "model.bin");
  o.expect(model == art.model, "model round trip not bit-exact");
  embedding::saveModel(model, dir / "model2.bin");
  o.expect(fileBytes(dir / "model.bin") == fileBytes(dir / "model2.bin"), "model re-save differs");

  for (const auto* m : {&art.corpus, &*art.bugMatrix}) {
    simindex::saveMatrix(*m, dir / "m.mat");
    const simindex::EmbeddingMatrix back = simindex::loadMatrix(dir / "m.mat");
    o.expect(back == *m, "matrix round trip not bit-exact");
  }

  // Full rebuild from the same inputs and seed, single-threaded.
  const corpus::CorpusManifest manifest = corpus::ingestDirectory(det::seedDir() / "corpus");
  corpus::BuildOptions options;
  options.params = det::seededParams();
  options.bugDatabase = det::seedBugDb();
  corpus::writeArtifacts(art, dir / "first");
  corpus::writeArtifacts(corpus::buildIndex(manifest, options), dir / "second");
  std::size_t compared = 0;
  for (const auto& e : fs::directory_iterator(dir / "first")) {
    const fs::path other = dir / "second" / e.path().filename();
    o.expect(fs::exists(other) && fileBytes(e.path()) == fileBytes(other),
             e.path().filename().string() + " differs between rebuilds");
    ++compared;
  }
  o.expect(compared >= 3, "expected model, corpus and bug artifacts");
  fs::remove_all(dir);
  o.detail = std::to_string(compared) + " artifact files bit-identical across rebuilds";
}

void serviceContract(Outcome& o) {
  const corpus::IndexArtifacts& art = det::seededArtifacts();
  auto artifacts = std::make_shared<service::ServiceArtifacts>();
  artifacts->model = art.model;
  artifacts->corpus = art.corpus;
  artifacts->bugMatrix = *art.bugMatrix;
  artifacts->bugs = *art.bugs;

  service::ServiceConfig cfg;  // no assets directory: the API must stand alone
  service::AnalysisService svc(cfg);
  service::HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  std::thread loop([&] { server.listen(); });
  server.waitUntilReady();
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(10, 0);

  auto early = client.Get("/api/v1/health");
  o.expect(early && early->status == 503, "health before loading is not 503");
  svc.setArtifacts(artifacts);

  auto health = client.Get("/api/v1/health");
  o.expect(health && health->status == 200, "health not 200 after loading");
  if (health && health->status == 200) {
    const json h = json::parse(health->body);
    o.expect(h["corpusRows"] == art.corpus.size(), "corpusRows mismatch");
    o.expect(h["bugRows"] == art.bugMatrix->size(), "bugRows mismatch");
    o.expect(h["modelDim"] == art.model.dim(), "modelDim mismatch");
  }

  auto analyze = [&](const std::string& source) {
    return client.Post("/api/v1/analyze", json{{"source", source}}.dump(), "application/json");
  };
  double selfSim = -1;
  auto self = analyze(det::readText(det::seedDir() / "corpus" / "escrow.sol"));
  o.expect(self && self->status == 200, "self-clone request failed");
  if (self && self->status == 200) {
    const json r = json::parse(self->body);
    selfSim = r["clones"].empty() ? -1.0 : r["clones"][0]["similarity"].get<double>();
    o.expect(selfSim == 1.0, "clones[0].similarity = " + fmt(selfSim, 17));
  }

  bool line8 = false;
  auto buggy = analyze(det::readText(det::fixtureDir() / "overflow_fork.sol"));
  o.expect(buggy && buggy->status == 200, "buggy fixture request failed");
  if (buggy && buggy->status == 200) {
    const json r = json::parse(buggy->body);
    for (const auto& b : r["bugs"]) {
      line8 = line8 || (b["startLine"] == 8 && b["bugType"] == "integer-overflow" &&
                        b["similarity"].get<double>() >= 0.95);
    }
    o.expect(line8, "no line-8 integer-overflow finding");
  }

  auto bad = analyze("not solidity at all");
  o.expect(bad && bad->status == 422, "unparseable source is not 422");
  if (bad && bad->status == 422) o.expect(json::parse(bad->body)["line"] == 1, "diagnostic not at line 1");

  auto root = client.Get("/");
  o.expect(root && root->status == 404, "static route without a bundle is not 404");

  server.stop();
  loop.join();
  o.detail = "self-clone " + fmt(selfSim, 1) + ", line-8 finding " + (line8 ? "present" : "missing") +
             ", 422 on unparseable input, health counts " + std::to_string(art.corpus.size()) + "/" +
             std::to_string(art.bugMatrix->size());
}

}  // namespace
}  // namespace smartembed

int main() {
  using namespace smartembed;
  const std::vector<Criterion> criteria{
      {"golden-serialization", 1, goldenSerialization},
      {"golden-normalization", 1, goldenNormalization},
      {"metric-suite", 1, metricSuite},
      {"search-oracle", 5, searchOracle},
      {"type2-clone-exactness", 30, type2Clones},
      {"seeded-bug-recall-precision", 30, seededBugs},
      {"threshold-monotonicity", 30, thresholdMonotonicity},
      {"training-progress", 60, trainingProgress},
      {"persistence-round-trips", 60, persistence},
      {"service-contract", 10, serviceContract},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < c.budgetSeconds, "took " + fmt(secs, 2) + " s, budget " + fmt(c.budgetSeconds, 0) + " s");
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail << " [" << fmt(secs, 2) << " s]\n";
    for (const auto& p : o.problems) std::cout << "     - " << p << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
