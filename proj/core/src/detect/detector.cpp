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

#include "smartembed/detect/detector.hpp"


#include "smartembed/error.hpp"
#include "smartembed/simindex/metric.hpp"
#include "smartembed/simindex/search.hpp"

namespace smartembed::detect {

namespace {

void checkThreshold(double t, const char* what) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

CloneReport findClones(const frontend::AnalyzedSource& source, const simindex::EmbeddingMatrix& corpus,
                       const embedding::EmbeddingModel& model, std::size_t k) {
  const frontend::TokenDocument doc = frontend::contractDocument(source);
  const embedding::FragmentVector query = embedding::embedFragment(model, doc);
  CloneReport report;
  report.queryRef = source.parsed.sourceRef;
  report.k = k;
  std::size_t rank = 0;
  for (const simindex::Match& m : simindex::topK(query.values, corpus, k)) {
    CloneMatch c;
    c.rank = ++rank;
    c.rowIndex = m.rowIndex;
    c.contractName = m.meta.label;
    c.sourceRef = m.meta.sourceRef;
    if (!m.meta.link.empty()) c.externalLink = m.meta.link;
    c.similarity = m.similarity;
    report.matches.push_back(std::move(c));
  }
  return report;
}

CloneReport findClones(const std::string& source, const simindex::EmbeddingMatrix& corpus,
                       const embedding::EmbeddingModel& model, std::size_t k) {
  return findClones(frontend::analyzeSource(source), corpus, model, k);
}

ClonePairsResult detectClonePairs(const simindex::EmbeddingMatrix& corpus, double delta) {
  checkThreshold(delta, "clone threshold");
  ClonePairsResult out;
  std::vector<bool> cloned(corpus.size(), false);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.size(); ++j) {
      const double s = simindex::similarityWithNorms(corpus.row(i), corpus.exactNorm(i), corpus.row(j),
                                                     corpus.exactNorm(j));
      if (s >= delta) {
        out.pairs.push_back({i, j, s});
        cloned[i] = cloned[j] = true;
      }
    }
  }
  CloneStats& st = out.stats;
  st.threshold = delta;
  st.clonePairCount = out.pairs.size();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    st.totalLines += corpus.meta(i).lineCount;
    if (cloned[i]) st.clonedLines += corpus.meta(i).lineCount;
  }
  st.cloneRatio = st.totalLines ? static_cast<double>(st.clonedLines) / static_cast<double>(st.totalLines)
                                : 0.0;
  return out;
}

CloneStats cloneRatio(const simindex::EmbeddingMatrix& corpus, double delta) {
  return detectClonePairs(corpus, delta).stats;
}

BugReport detectBugs(const frontend::AnalyzedSource& source, const simindex::EmbeddingMatrix& bugs,
                     const BugDatabase& db, const embedding::EmbeddingModel& model, double theta,
                     bool verbose) {
  checkThreshold(theta, "bug threshold");
  if (bugs.size() != db.size()) {
    throw InvalidArgument("bug matrix has " + std::to_string(bugs.size()) + " rows but the database has " +
                          std::to_string(db.size()) + " records");
  }
  for (std::size_t i = 0; i < bugs.size(); ++i) {
    if (bugs.meta(i).id != db.records()[i].bugId) {
      throw InvalidArgument("bug matrix row " + std::to_string(i) + " is '" + bugs.meta(i).id +
                            "' but the database has '" + db.records()[i].bugId + "'");
    }
  }

  BugReport report;
  report.thresholdUsed = theta;
  for (const frontend::TokenDocument& doc : frontend::statementDocuments(source)) {
    const embedding::FragmentVector v = embedding::embedFragment(model, doc);
    const std::vector<simindex::Match> matches = simindex::thresholdQuery(v.values, bugs, theta);
    const simindex::Match* best = nullptr;
    for (const simindex::Match& m : matches) {
      if (!best || m.similarity > best->similarity ||
          (m.similarity == best->similarity && m.meta.id < best->meta.id)) {
        best = &m;
      }
      if (verbose) {
        report.allMatches.push_back({doc.startLine(), doc.endLine(), m.meta.id, m.meta.label, m.similarity});
      }
    }
    if (best) {
      report.findings.push_back(
          {doc.startLine(), doc.endLine(), best->meta.id, best->meta.label, best->similarity});
    }
  }
  return report;
}

BugReport detectBugs(const std::string& source, const simindex::EmbeddingMatrix& bugs,
                     const BugDatabase& db, const embedding::EmbeddingModel& model, double theta,
                     bool verbose) {
  return detectBugs(frontend::analyzeSource(source), bugs, db, model, theta, verbose);
}

}  // namespace smartembed::detect
