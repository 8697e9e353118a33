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

#include "smartembed/detect/bug_database.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "smartembed/embedding/model.hpp"
#include "smartembed/error.hpp"
#include "smartembed/frontend/normalizer.hpp"
#include "smartembed/frontend/pipeline.hpp"
#include "util/file_io.hpp"

namespace smartembed::detect {

namespace {

std::string squeeze(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::string leafText(const frontend::AstNode& node) {
  std::string out;
  node.forEachLeaf([&](const frontend::Leaf& leaf) { out += leaf.token.text; });
  return out;
}

// Among units starting at `line`: the first whose text begins with `raw`
// (whitespace ignored), otherwise the first simple unit, otherwise any.
const frontend::AstNode* unitAtLine(const std::vector<frontend::StatementSite>& sites, int line,
                                    const std::string& raw, frontend::StatementContext* ctx) {
  const frontend::StatementSite* textMatch = nullptr;
  const frontend::StatementSite* fallback = nullptr;
  for (const auto& site : sites) {
    if (site.statement->spanStart() != line) continue;
    if (!textMatch && !raw.empty() && leafText(*site.statement).rfind(raw, 0) == 0) textMatch = &site;
    const bool compound = frontend::isCompoundStatement(site.statement->kind());
    if (!fallback || (frontend::isCompoundStatement(fallback->statement->kind()) && !compound)) {
      fallback = &site;
    }
  }
  const frontend::StatementSite* best = textMatch ? textMatch : fallback;
  if (!best) return nullptr;
  *ctx = best->context;
  return best->statement;
}

frontend::TokenDocument documentFor(const frontend::AnalyzedSource& src,
                                    const frontend::AstNode& unit,
                                    const frontend::StatementContext& ctx) {
  return frontend::normalize(frontend::serializeStatement(unit, ctx, src.parsed.sourceRef),
                             src.bindings);
}

}  // namespace

BugDatabase::BugDatabase(std::vector<BugRecord> records) : records_(std::move(records)) {
  std::set<std::string> seen;
  for (const BugRecord& r : records_) {
    if (!seen.insert(r.bugId).second) throw InvalidArgument("duplicate bugId '" + r.bugId + "'");
  }
}

const BugRecord* BugDatabase::find(const std::string& bugId) const {
  for (const BugRecord& r : records_) {
    if (r.bugId == bugId) return &r;
  }
  return nullptr;
}

std::optional<frontend::TokenDocument> statementDocumentAtLine(const std::string& source, int line,
                                                               const std::string& sourceRef) {
  const frontend::AnalyzedSource src = frontend::analyzeSource(source, sourceRef);
  frontend::StatementContext ctx;
  const auto sites = frontend::collectStatements(src.parsed.root);
  const frontend::AstNode* unit = unitAtLine(sites, line, {}, &ctx);
  if (!unit) return std::nullopt;
  return documentFor(src, *unit, ctx);
}

BugDatabase loadBugDatabase(const std::filesystem::path& tsv, std::vector<std::string>* warnings) {
  std::ifstream in(tsv);
  if (!in) throw IoError("cannot read bug database '" + tsv.string() + "'");
  const std::filesystem::path base = tsv.parent_path();

  struct Parsed {
    frontend::AnalyzedSource source;
    std::vector<frontend::StatementSite> sites;
  };
  std::map<std::string, std::unique_ptr<Parsed>> cache;
  std::vector<BugRecord> records;

  std::string line;
  for (int lineNo = 1; std::getline(in, line); ++lineNo) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (fields.size() < 4) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) break;
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    fields.push_back(line.substr(start));
    const std::string where = tsv.string() + ":" + std::to_string(lineNo);
    if (fields[0] == "bugId") continue;
    if (fields.size() != 5) throw InvalidArgument(where + ": expected 5 tab-separated fields");

    BugRecord r;
    r.bugId = fields[0];
    r.bugType = fields[1];
    r.sourceContract = fields[2];
    r.rawStatement = fields[4];
    try {
      std::size_t used = 0;
      r.lineInSource = std::stoi(fields[3], &used);
      if (used != fields[3].size() || r.lineInSource < 1) throw std::invalid_argument("range");
    } catch (const std::exception&) {
      throw InvalidArgument(where + ": bad line number '" + fields[3] + "'");
    }
    if (r.bugId.empty() || r.bugType.empty()) throw InvalidArgument(where + ": empty bugId or bugType");

    auto& entry = cache[r.sourceContract];
    if (!entry) {
      const std::filesystem::path path = base / r.sourceContract;
      entry = std::make_unique<Parsed>();
      entry->source = frontend::analyzeSource(util::readFile(path), r.sourceContract);
      entry->sites = frontend::collectStatements(entry->source.parsed.root);
    }
    frontend::StatementContext ctx;
    const std::string raw = squeeze(r.rawStatement);
    const frontend::AstNode* unit = unitAtLine(entry->sites, r.lineInSource, raw, &ctx);
    if (!unit) {
      throw InvalidArgument(where + ": no statement starts at line " + std::to_string(r.lineInSource) +
                            " of '" + r.sourceContract + "'");
    }
    if (warnings && leafText(*unit).rfind(raw, 0) != 0) {
      warnings->push_back(where + ": statement text differs from line " +
                          std::to_string(r.lineInSource) + " of '" + r.sourceContract + "'");
    }
    r.normalizedDoc = documentFor(entry->source, *unit, ctx);
    records.push_back(std::move(r));
  }
  return BugDatabase(std::move(records));
}

simindex::EmbeddingMatrix buildBugMatrix(const BugDatabase& db, const embedding::EmbeddingModel& model) {
  std::vector<embedding::FragmentVector> rows;
  std::vector<simindex::RowMeta> meta;
  for (const BugRecord& r : db.records()) {
    rows.push_back(embedding::embedFragment(model, r.normalizedDoc));
    simindex::RowMeta m;
    m.id = r.bugId;
    m.granularity = frontend::Granularity::Statement;
    m.sourceRef = r.sourceContract + ":" + std::to_string(r.lineInSource);
    m.label = r.bugType;
    m.lineCount = static_cast<std::uint32_t>(r.normalizedDoc.endLine() - r.normalizedDoc.startLine() + 1);
    meta.push_back(std::move(m));
  }
  return simindex::buildMatrix(rows, std::move(meta), model.dim());
}

}  // namespace smartembed::detect
