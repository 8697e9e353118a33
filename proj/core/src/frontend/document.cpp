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

#include "smartembed/frontend/document.hpp"

#include <charconv>

#include "smartembed/error.hpp"

namespace smartembed::frontend {

std::string_view granularityName(Granularity g) noexcept {
  switch (g) {
    case Granularity::Contract: return "contract";
    case Granularity::SubContract: return "subcontract";
    case Granularity::Function: return "function";
    case Granularity::Statement: return "statement";
  }
  return "contract";
}

Granularity parseGranularity(std::string_view name) {
  if (name == "contract") return Granularity::Contract;
  if (name == "subcontract") return Granularity::SubContract;
  if (name == "function") return Granularity::Function;
  if (name == "statement") return Granularity::Statement;
  throw InvalidArgument("unknown granularity '" + std::string(name) + "'");
}

namespace {

int parseSpanPart(std::string_view part) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
  if (ec != std::errc{} || ptr != part.data() + part.size()) return 0;
  return value;
}

}  // namespace

int TokenDocument::startLine() const {
  const auto sep = id.find('_');
  return sep == std::string::npos ? 0 : parseSpanPart(std::string_view(id).substr(0, sep));
}

int TokenDocument::endLine() const {
  const auto sep = id.find('_');
  return sep == std::string::npos ? 0 : parseSpanPart(std::string_view(id).substr(sep + 1));
}

std::string TokenDocument::joined() const {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string spanId(int startLine, int endLine) {
  return std::to_string(startLine) + "_" + std::to_string(endLine);
}

std::string formatDocumentLine(const TokenDocument& doc) { return doc.id + " : " + doc.joined(); }

TokenDocument parseDocumentLine(std::string_view line, Granularity granularity) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  const auto sep = line.find(" : ");
  if (sep == std::string_view::npos) {
    throw InvalidArgument("document line lacks ' : ' separator: '" + std::string(line) + "'");
  }
  TokenDocument doc;
  doc.id = std::string(line.substr(0, sep));
  doc.granularity = granularity;
  std::string_view rest = line.substr(sep + 3);
  std::size_t i = 0;
  while (i < rest.size()) {
    while (i < rest.size() && rest[i] == ' ') ++i;
    std::size_t j = i;
    while (j < rest.size() && rest[j] != ' ') ++j;
    if (j > i) doc.tokens.emplace_back(rest.substr(i, j - i));
    i = j;
  }
  if (doc.tokens.empty()) throw InvalidArgument("document '" + doc.id + "' has no tokens");
  return doc;
}

}  // namespace smartembed::frontend
