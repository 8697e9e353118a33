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
#include <optional>
#include <string>
#include <vector>

#include "smartembed/detect/bug_database.hpp"
#include "smartembed/embedding/model.hpp"
#include "smartembed/frontend/pipeline.hpp"
#include "smartembed/simindex/matrix.hpp"

namespace smartembed::detect {

inline constexpr std::size_t kDefaultTopK = 5;
inline constexpr double kDefaultBugThreshold = 0.95;

struct CloneMatch {
  std::size_t rank = 0;  // 1-based
  std::size_t rowIndex = 0;
  std::string contractName;
  std::string sourceRef;
  std::optional<std::string> externalLink;
  double similarity = 0.0;

  bool operator==(const CloneMatch&) const = default;
};

struct CloneReport {
  std::string queryRef;
  std::size_t k = kDefaultTopK;
  std::vector<CloneMatch> matches;

  bool operator==(const CloneReport&) const = default;
};

struct ClonePair {
  std::size_t first = 0;
  std::size_t second = 0;
  double similarity = 0.0;

  bool operator==(const ClonePair&) const = default;
};

/// A contract's full line count is cloned when it appears in any pair.
struct CloneStats {
  std::size_t totalLines = 0;
  std::size_t clonedLines = 0;
  double cloneRatio = 0.0;
  std::size_t clonePairCount = 0;
  double threshold = 0.0;

  bool operator==(const CloneStats&) const = default;
};

struct ClonePairsResult {
  std::vector<ClonePair> pairs;  // (first, second) ascending
  CloneStats stats;

  bool operator==(const ClonePairsResult&) const = default;
};

struct BugFinding {
  int startLine = 0;
  int endLine = 0;
  std::string bugId;
  std::string bugType;
  double similarity = 0.0;

  bool operator==(const BugFinding&) const = default;
};

struct BugReport {
  double thresholdUsed = kDefaultBugThreshold;
  std::vector<BugFinding> findings;     // best match per statement, source order
  std::vector<BugFinding> allMatches;   // every match ≥ threshold, when verbose

  bool operator==(const BugReport&) const = default;
};

/// Top-k corpus contracts for the whole-file document of `source`.
CloneReport findClones(const frontend::AnalyzedSource& source, const simindex::EmbeddingMatrix& corpus,
                       const embedding::EmbeddingModel& model, std::size_t k = kDefaultTopK);
CloneReport findClones(const std::string& source, const simindex::EmbeddingMatrix& corpus,
                       const embedding::EmbeddingModel& model, std::size_t k = kDefaultTopK);

/// All pairs i < j with similarity ≥ delta. Throws InvalidArgument outside [0, 1].
ClonePairsResult detectClonePairs(const simindex::EmbeddingMatrix& corpus, double delta);
CloneStats cloneRatio(const simindex::EmbeddingMatrix& corpus, double delta);

/// Each statement's best bug match at or above theta (ties: lowest bugId).
/// Throws InvalidArgument when `bugs` and `db` are not aligned row by row.
BugReport detectBugs(const frontend::AnalyzedSource& source, const simindex::EmbeddingMatrix& bugs,
                     const BugDatabase& db, const embedding::EmbeddingModel& model,
                     double theta = kDefaultBugThreshold, bool verbose = false);
BugReport detectBugs(const std::string& source, const simindex::EmbeddingMatrix& bugs,
                     const BugDatabase& db, const embedding::EmbeddingModel& model,
                     double theta = kDefaultBugThreshold, bool verbose = false);

}  // namespace smartembed::detect
