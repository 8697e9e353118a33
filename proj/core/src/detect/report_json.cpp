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

#include "smartembed/detect/report_json.hpp"

#include <json.hpp>

#include "smartembed/error.hpp"

namespace smartembed::detect {

using nlohmann::json;

namespace {

json findingJson(const BugFinding& f) {
  return {{"startLine", f.startLine},
          {"endLine", f.endLine},
          {"bugId", f.bugId},
          {"bugType", f.bugType},
          {"similarity", f.similarity}};
}

BugFinding findingFrom(const json& j) {
  return {j.at("startLine").get<int>(), j.at("endLine").get<int>(), j.at("bugId").get<std::string>(),
          j.at("bugType").get<std::string>(), j.at("similarity").get<double>()};
}

template <typename F>
auto guarded(std::string_view text, const char* what, F&& f) {
  try {
    return f(json::parse(text));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

std::string cloneReportToJson(const CloneReport& report) {
  json matches = json::array();
  for (const CloneMatch& m : report.matches) {
    matches.push_back({{"rank", m.rank},
                       {"rowIndex", m.rowIndex},
                       {"contractName", m.contractName},
                       {"sourceRef", m.sourceRef},
                       {"externalLink", m.externalLink ? json(*m.externalLink) : json(nullptr)},
                       {"similarity", m.similarity}});
  }
  return json{{"queryRef", report.queryRef}, {"k", report.k}, {"matches", std::move(matches)}}.dump(2) + "\n";
}

CloneReport cloneReportFromJson(std::string_view text) {
  return guarded(text, "clone report", [](const json& j) {
    CloneReport r;
    r.queryRef = j.at("queryRef").get<std::string>();
    r.k = j.at("k").get<std::size_t>();
    for (const json& m : j.at("matches")) {
      CloneMatch c;
      c.rank = m.at("rank").get<std::size_t>();
      c.rowIndex = m.at("rowIndex").get<std::size_t>();
      c.contractName = m.at("contractName").get<std::string>();
      c.sourceRef = m.at("sourceRef").get<std::string>();
      if (!m.at("externalLink").is_null()) c.externalLink = m.at("externalLink").get<std::string>();
      c.similarity = m.at("similarity").get<double>();
      r.matches.push_back(std::move(c));
    }
    return r;
  });
}

std::string bugReportToJson(const BugReport& report, bool includeAllMatches) {
  json findings = json::array();
  for (const BugFinding& f : report.findings) findings.push_back(findingJson(f));
  json j = {{"thresholdUsed", report.thresholdUsed}, {"findings", std::move(findings)}};
  if (includeAllMatches) {
    json all = json::array();
    for (const BugFinding& f : report.allMatches) all.push_back(findingJson(f));
    j["allMatches"] = std::move(all);
  }
  return j.dump(2) + "\n";
}

BugReport bugReportFromJson(std::string_view text) {
  return guarded(text, "bug report", [](const json& j) {
    BugReport r;
    r.thresholdUsed = j.at("thresholdUsed").get<double>();
    for (const json& f : j.at("findings")) r.findings.push_back(findingFrom(f));
    if (j.contains("allMatches")) {
      for (const json& f : j.at("allMatches")) r.allMatches.push_back(findingFrom(f));
    }
    return r;
  });
}

std::string clonePairsToJson(const ClonePairsResult& result, const simindex::EmbeddingMatrix& corpus) {
  json pairs = json::array();
  for (const ClonePair& p : result.pairs) {
    pairs.push_back({{"first", p.first},
                     {"second", p.second},
                     {"firstId", corpus.meta(p.first).id},
                     {"secondId", corpus.meta(p.second).id},
                     {"similarity", p.similarity}});
  }
  const CloneStats& s = result.stats;
  json stats = {{"totalLines", s.totalLines},
                {"clonedLines", s.clonedLines},
                {"cloneRatio", s.cloneRatio},
                {"clonePairCount", s.clonePairCount},
                {"threshold", s.threshold}};
  return json{{"pairs", std::move(pairs)}, {"stats", std::move(stats)}}.dump(2) + "\n";
}

ClonePairsResult clonePairsFromJson(std::string_view text) {
  return guarded(text, "clone pairs", [](const json& j) {
    ClonePairsResult r;
    for (const json& p : j.at("pairs")) {
      r.pairs.push_back(
          {p.at("first").get<std::size_t>(), p.at("second").get<std::size_t>(), p.at("similarity").get<double>()});
    }
    const json& s = j.at("stats");
    r.stats.totalLines = s.at("totalLines").get<std::size_t>();
    r.stats.clonedLines = s.at("clonedLines").get<std::size_t>();
    r.stats.cloneRatio = s.at("cloneRatio").get<double>();
    r.stats.clonePairCount = s.at("clonePairCount").get<std::size_t>();
    r.stats.threshold = s.at("threshold").get<double>();
    return r;
  });
}

}  // namespace smartembed::detect
