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

#include "smartembed/embedding/model.hpp"
#include "smartembed/frontend/document.hpp"
#include "smartembed/simindex/matrix.hpp"

namespace smartembed::detect {

struct BugRecord {
  std::string bugId;
  std::string bugType;
  std::string rawStatement;
  frontend::TokenDocument normalizedDoc;
  std::string sourceContract;  // path as written in the database
  int lineInSource = 0;
};

/// Known-vulnerable statements. Record order is the row order of matrix B.
class BugDatabase {
 public:
  BugDatabase() = default;
  /// Throws InvalidArgument on a duplicate bugId.
  explicit BugDatabase(std::vector<BugRecord> records);

  const std::vector<BugRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  const BugRecord* find(const std::string& bugId) const;

 private:
  std::vector<BugRecord> records_;
};

/// Reads the tab-separated database (bugId, bugType, sourceContractPath,
/// lineNumber, rawStatement). Source paths resolve against the file's
/// directory; each record's document is the statement unit starting at
/// lineNumber in that source, serialized with its full context and
/// normalized. Blank lines, '#' comments and a "bugId" header row are
/// skipped. Non-fatal discrepancies are appended to `warnings`.
BugDatabase loadBugDatabase(const std::filesystem::path& tsv,
                            std::vector<std::string>* warnings = nullptr);

/// Statement document for the unit starting at `line`, preferring a simple
/// statement over a compound one that starts on the same line.
std::optional<frontend::TokenDocument> statementDocumentAtLine(const std::string& source, int line,
                                                               const std::string& sourceRef = {});

/// Matrix B: one row per record, meta {bugId, Statement, path:line, bugType}.
simindex::EmbeddingMatrix buildBugMatrix(const BugDatabase& db, const embedding::EmbeddingModel& model);

}  // namespace smartembed::detect
