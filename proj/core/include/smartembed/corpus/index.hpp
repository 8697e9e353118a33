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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "smartembed/corpus/manifest.hpp"
#include "smartembed/detect/bug_database.hpp"
#include "smartembed/embedding/hyper_params.hpp"
#include "smartembed/embedding/model.hpp"
#include "smartembed/embedding/trainer.hpp"
#include "smartembed/simindex/matrix.hpp"

namespace smartembed::corpus {

struct BuildOptions {
  embedding::HyperParams params;
  embedding::TrainOptions train;
  /// Bug database TSV; its source files also join the training corpus.
  std::optional<std::filesystem::path> bugDatabase;
};

/// Corpus statistics in the shape of the usual contract/function/statement
/// breakdown, over the files that parsed.
struct BuildReport {
  std::size_t files = 0;
  std::size_t contracts = 0;  // indexed files, rows of C
  std::size_t subcontracts = 0;
  std::size_t functions = 0;
  std::size_t statements = 0;
  std::size_t lines = 0;
  std::size_t trainingDocuments = 0;
  std::size_t bugRecords = 0;
  std::vector<IngestNote> failures;
  std::vector<std::string> warnings;
};

struct IndexArtifacts {
  embedding::EmbeddingModel model;
  simindex::EmbeddingMatrix corpus;
  std::optional<detect::BugDatabase> bugs;
  std::optional<simindex::EmbeddingMatrix> bugMatrix;
  BuildReport report;
};

/// Parses every entry, trains a model (unless `pretrained` is given), embeds
/// each file into one row of C and, with a bug database, builds B.
/// Unparseable files are reported and skipped; BuildFailed when more than
/// half fail, EmptyCorpus for an empty manifest.
IndexArtifacts buildIndex(const CorpusManifest& manifest, const BuildOptions& options,
                          const embedding::EmbeddingModel* pretrained = nullptr);

/// Training corpus only: contract and statement documents of every parseable
/// entry, then of the bug sources. Parse failures are appended to `failures`.
std::vector<frontend::TokenDocument> trainingDocuments(const CorpusManifest& manifest,
                                                       const std::optional<std::filesystem::path>& bugDatabase,
                                                       std::vector<IngestNote>* failures = nullptr);

/// Throws InvalidArgument unless the row ids of C are manifest paths in
/// manifest order.
void verifyAlignment(const CorpusManifest& manifest, const simindex::EmbeddingMatrix& corpus);

std::string buildReportToJson(const BuildReport& report);

/// model.bin, corpus.mat, bugs.mat (when built) and build_report.json.
void writeArtifacts(const IndexArtifacts& artifacts, const std::filesystem::path& outDir);

}  // namespace smartembed::corpus
