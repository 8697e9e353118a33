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

#include "smartembed/corpus/index.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "smartembed/embedding/model_io.hpp"
#include "smartembed/error.hpp"
#include "smartembed/frontend/pipeline.hpp"
#include "smartembed/simindex/matrix_io.hpp"
#include "util/file_io.hpp"

namespace smartembed::corpus {

namespace fs = std::filesystem;

namespace {

struct ParsedEntry {
  const ContractEntry* entry = nullptr;
  frontend::AnalyzedSource source;
  frontend::TokenDocument contractDoc;
};

std::vector<ParsedEntry> parseEntries(const CorpusManifest& manifest, std::vector<IngestNote>* failures) {
  std::vector<ParsedEntry> out;
  out.reserve(manifest.entries.size());
  for (const ContractEntry& entry : manifest.entries) {
    try {
      ParsedEntry p;
      p.entry = &entry;
      p.source = frontend::analyzeSource(util::readFile(manifest.pathOf(entry)), entry.path);
      p.contractDoc = frontend::contractDocument(p.source);
      out.push_back(std::move(p));
    } catch (const Error& e) {
      if (failures) failures->push_back({entry.path, e.what()});
    }
  }
  return out;
}

void appendDocuments(const frontend::AnalyzedSource& src, const frontend::TokenDocument& contractDoc,
                     std::vector<frontend::TokenDocument>& docs) {
  docs.push_back(contractDoc);
  for (frontend::TokenDocument& d : frontend::statementDocuments(src)) docs.push_back(std::move(d));
}

// Source files referenced by the bug database, in path order.
void appendBugSourceDocuments(const fs::path& tsv, std::vector<frontend::TokenDocument>& docs,
                              std::vector<IngestNote>* failures) {
  const detect::BugDatabase db = detect::loadBugDatabase(tsv);
  std::set<std::string> sources;
  for (const detect::BugRecord& r : db.records()) sources.insert(r.sourceContract);
  for (const std::string& rel : sources) {
    try {
      const auto src = frontend::analyzeSource(util::readFile(tsv.parent_path() / rel), rel);
      appendDocuments(src, frontend::contractDocument(src), docs);
    } catch (const Error& e) {
      if (failures) failures->push_back({rel, e.what()});
    }
  }
}

void checkFailureRate(std::size_t failed, std::size_t total, const std::vector<IngestNote>& failures) {
  if (2 * failed <= total) return;
  std::string msg = "index build failed: " + std::to_string(failed) + " of " + std::to_string(total) +
                    " files did not parse";
  if (!failures.empty()) msg += " (first: " + failures.front().path + ": " + failures.front().message + ")";
  throw BuildFailed(msg);
}

}  // namespace

std::vector<frontend::TokenDocument> trainingDocuments(const CorpusManifest& manifest,
                                                       const std::optional<fs::path>& bugDatabase,
                                                       std::vector<IngestNote>* failures) {
  std::vector<frontend::TokenDocument> docs;
  for (const ParsedEntry& p : parseEntries(manifest, failures)) appendDocuments(p.source, p.contractDoc, docs);
  if (bugDatabase) appendBugSourceDocuments(*bugDatabase, docs, failures);
  return docs;
}

IndexArtifacts buildIndex(const CorpusManifest& manifest, const BuildOptions& options,
                          const embedding::EmbeddingModel* pretrained) {
  if (manifest.entries.empty()) throw EmptyCorpus("manifest has no entries");
  IndexArtifacts out;
  BuildReport& report = out.report;
  report.files = manifest.entries.size();

  const std::vector<ParsedEntry> parsed = parseEntries(manifest, &report.failures);
  checkFailureRate(report.failures.size(), report.files, report.failures);

  if (options.bugDatabase) out.bugs = detect::loadBugDatabase(*options.bugDatabase, &report.warnings);

  if (pretrained) {
    out.model = *pretrained;
  } else {
    std::vector<frontend::TokenDocument> docs;
    for (const ParsedEntry& p : parsed) appendDocuments(p.source, p.contractDoc, docs);
    if (options.bugDatabase) {
      std::vector<IngestNote> bugFailures;
      appendBugSourceDocuments(*options.bugDatabase, docs, &bugFailures);
      for (const IngestNote& n : bugFailures) report.warnings.push_back(n.path + ": " + n.message);
    }
    report.trainingDocuments = docs.size();
    out.model = embedding::train(docs, options.params, options.train);
  }

  std::vector<embedding::FragmentVector> fragments;
  std::vector<simindex::RowMeta> metas;
  for (const ParsedEntry& p : parsed) {
    fragments.push_back(embedding::embedFragment(out.model, p.contractDoc));
    simindex::RowMeta meta;
    meta.id = p.entry->path;
    meta.granularity = frontend::Granularity::Contract;
    meta.sourceRef = p.entry->path;
    meta.label = p.entry->contractName;
    meta.link = p.entry->externalLink.value_or("");
    meta.lineCount = p.entry->lineCount;
    metas.push_back(std::move(meta));

    const frontend::SourceCounts counts = frontend::countEntities(p.source.parsed.root);
    report.subcontracts += counts.subcontracts;
    report.functions += counts.functions;
    report.statements += counts.statements;
    report.lines += p.entry->lineCount;
  }
  report.contracts = parsed.size();
  out.corpus = simindex::buildMatrix(fragments, std::move(metas), out.model.dim());

  if (out.bugs) {
    out.bugMatrix = detect::buildBugMatrix(*out.bugs, out.model);
    report.bugRecords = out.bugs->size();
  }
  return out;
}

void verifyAlignment(const CorpusManifest& manifest, const simindex::EmbeddingMatrix& corpus) {
  std::size_t next = 0;
  for (std::size_t row = 0; row < corpus.size(); ++row) {
    const std::string& id = corpus.meta(row).id;
    while (next < manifest.entries.size() && manifest.entries[next].path != id) ++next;
    if (next == manifest.entries.size()) {
      throw InvalidArgument("corpus row " + std::to_string(row) + " ('" + id +
                            "') does not follow the manifest order");
    }
    ++next;
  }
}

std::string buildReportToJson(const BuildReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const IngestNote& f : report.failures) failures.push_back({{"path", f.path}, {"error", f.message}});
  nlohmann::json j = {{"files", report.files},
                      {"contracts", report.contracts},
                      {"subcontracts", report.subcontracts},
                      {"functions", report.functions},
                      {"statements", report.statements},
                      {"lines", report.lines},
                      {"trainingDocuments", report.trainingDocuments},
                      {"bugRecords", report.bugRecords},
                      {"failures", std::move(failures)},
                      {"warnings", report.warnings}};
  return j.dump(2) + "\n";
}

void writeArtifacts(const IndexArtifacts& artifacts, const fs::path& outDir) {
  fs::create_directories(outDir);
  embedding::saveModel(artifacts.model, outDir / "model.bin");
  simindex::saveMatrix(artifacts.corpus, outDir / "corpus.mat");
  if (artifacts.bugMatrix) simindex::saveMatrix(*artifacts.bugMatrix, outDir / "bugs.mat");
  util::writeFile(outDir / "build_report.json", buildReportToJson(artifacts.report));
}

}  // namespace smartembed::corpus
