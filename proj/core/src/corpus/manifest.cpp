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

#include "smartembed/corpus/manifest.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <ctime>
#include <map>
#include <set>

#include <json.hpp>

#include "smartembed/error.hpp"
#include "smartembed/frontend/lexer.hpp"
#include "util/file_io.hpp"

#ifndef SMARTEMBED_VERSION
#define SMARTEMBED_VERSION "0.0.0"
#endif

namespace smartembed::corpus {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kManifestFormat = "smartembed-manifest";
constexpr int kManifestVersion = 1;

std::string utcNow() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool isHexDigest(const std::string& s) {
  return s.size() == 64 && std::all_of(s.begin(), s.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

std::optional<std::string> optionalString(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw InvalidArgument(std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

void readSidecar(const fs::path& sidecar, const std::string& rel, ContractEntry& entry,
                 IngestReport* report) {
  auto warn = [&](const std::string& msg) {
    if (report) report->warnings.push_back({rel, msg});
  };
  json meta;
  try {
    meta = json::parse(util::readFile(sidecar));
  } catch (const std::exception& e) {
    warn("ignoring unreadable sidecar: " + std::string(e.what()));
    return;
  }
  if (!meta.is_object()) {
    warn("ignoring sidecar that is not a JSON object");
    return;
  }
  try {
    if (auto name = optionalString(meta, "contractName"); name && !name->empty()) entry.contractName = *name;
    if (auto addr = optionalString(meta, "address")) {
      if (isValidAddress(*addr)) {
        entry.address = *addr;
      } else {
        warn("ignoring malformed address '" + *addr + "'");
      }
    }
    if (auto link = optionalString(meta, "externalLink"); link && !link->empty()) entry.externalLink = *link;
  } catch (const InvalidArgument& e) {
    warn(std::string("sidecar: ") + e.what());
  }
}

}  // namespace

fs::path CorpusManifest::pathOf(const ContractEntry& entry) const { return fs::path(root) / entry.path; }

bool isValidAddress(std::string_view address) noexcept {
  if (address.size() != 42 || address[0] != '0' || (address[1] != 'x' && address[1] != 'X')) return false;
  return std::all_of(address.begin() + 2, address.end(),
                     [](char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string sha256Hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

std::uint32_t countLines(std::string_view text) noexcept {
  std::uint32_t n = static_cast<std::uint32_t>(std::count(text.begin(), text.end(), '\n'));
  if (!text.empty() && text.back() != '\n') ++n;
  return std::max<std::uint32_t>(n, 1);
}

std::string guessContractName(std::string_view source, const std::string& fallback) {
  std::string name;
  try {
    const auto tokens = frontend::tokenizeCode(source);
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      const auto& t = tokens[i];
      if (t.kind == frontend::TokenKind::Keyword &&
          (t.text == "contract" || t.text == "library" || t.text == "interface") &&
          tokens[i + 1].kind == frontend::TokenKind::Identifier) {
        name = tokens[i + 1].text;
      }
    }
  } catch (const Error&) {
    return fallback;
  }
  return name.empty() ? fallback : name;
}

std::string toolVersion() { return SMARTEMBED_VERSION; }

CorpusManifest ingestDirectory(const fs::path& root, const IngestOptions& options, IngestReport* report) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw InvalidArgument("corpus root '" + root.string() + "' is not a directory");

  std::vector<std::pair<std::string, fs::path>> files;
  for (auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied, ec);
       it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) break;
    // Anything but a directory is a candidate so unreadable entries get reported.
    if (it->path().extension() == ".sol" && !it->is_directory(ec)) {
      files.emplace_back(fs::relative(it->path(), root).generic_string(), it->path());
    }
  }
  if (ec && report) report->warnings.push_back({root.string(), "directory walk stopped: " + ec.message()});
  std::sort(files.begin(), files.end());

  CorpusManifest manifest;
  manifest.root = fs::absolute(root).lexically_normal().string();
  manifest.createdAt = utcNow();
  manifest.toolVersion = toolVersion();
  manifest.allowDuplicates = options.keepDuplicates;

  std::map<std::string, std::string> firstByHash;
  for (const auto& [rel, path] : files) {
    std::string bytes;
    try {
      bytes = util::readFile(path);
    } catch (const IoError& e) {
      if (report) report->skipped.push_back({rel, e.what()});
      continue;
    }
    ContractEntry entry;
    entry.path = rel;
    entry.sha256 = sha256Hex(bytes);
    entry.lineCount = countLines(bytes);
    entry.contractName = guessContractName(bytes, path.stem().string());

    auto [it, fresh] = firstByHash.emplace(entry.sha256, rel);
    if (!fresh && !options.keepDuplicates) {
      if (report) report->duplicates.push_back({rel, "byte-identical to " + it->second});
      continue;
    }
    fs::path sidecar = path;
    sidecar += ".meta.json";
    if (fs::exists(sidecar, ec)) readSidecar(sidecar, rel, entry, report);
    manifest.entries.push_back(std::move(entry));
  }
  if (manifest.entries.empty()) throw EmptyCorpus("no readable .sol files under '" + root.string() + "'");
  return manifest;
}

void validateManifest(const CorpusManifest& manifest) {
  std::set<std::string> paths;
  std::set<std::string> hashes;
  for (const ContractEntry& e : manifest.entries) {
    if (e.path.empty()) throw InvalidArgument("manifest entry with an empty path");
    if (!paths.insert(e.path).second) throw InvalidArgument("duplicate manifest path '" + e.path + "'");
    if (e.address && !isValidAddress(*e.address)) {
      throw InvalidArgument("malformed address '" + *e.address + "' for '" + e.path + "'");
    }
    if (e.lineCount < 1) throw InvalidArgument("lineCount must be at least 1 for '" + e.path + "'");
    if (!isHexDigest(e.sha256)) throw InvalidArgument("bad sha256 for '" + e.path + "'");
    if (!hashes.insert(e.sha256).second && !manifest.allowDuplicates) {
      throw InvalidArgument("duplicate content hash for '" + e.path + "'");
    }
  }
}

std::string manifestToJson(const CorpusManifest& manifest) {
  json entries = json::array();
  for (const ContractEntry& e : manifest.entries) {
    entries.push_back({{"path", e.path},
                       {"contractName", e.contractName},
                       {"address", e.address ? json(*e.address) : json(nullptr)},
                       {"externalLink", e.externalLink ? json(*e.externalLink) : json(nullptr)},
                       {"lineCount", e.lineCount},
                       {"sha256", e.sha256}});
  }
  json j = {{"format", kManifestFormat},
            {"version", kManifestVersion},
            {"root", manifest.root},
            {"createdAt", manifest.createdAt},
            {"toolVersion", manifest.toolVersion},
            {"allowDuplicates", manifest.allowDuplicates},
            {"entries", std::move(entries)}};
  return j.dump(2) + "\n";
}

CorpusManifest manifestFromJson(std::string_view text) {
  CorpusManifest m;
  try {
    const json j = json::parse(text);
    if (j.value("format", "") != kManifestFormat) throw InvalidArgument("not a corpus manifest");
    const int version = j.at("version").get<int>();
    if (version != kManifestVersion) {
      throw FormatVersionMismatch(kManifestVersion, static_cast<std::uint32_t>(version));
    }
    m.root = j.at("root").get<std::string>();
    m.createdAt = j.value("createdAt", "");
    m.toolVersion = j.value("toolVersion", "");
    m.allowDuplicates = j.value("allowDuplicates", false);
    for (const json& e : j.at("entries")) {
      ContractEntry entry;
      entry.path = e.at("path").get<std::string>();
      entry.contractName = e.at("contractName").get<std::string>();
      entry.address = optionalString(e, "address");
      entry.externalLink = optionalString(e, "externalLink");
      entry.lineCount = e.at("lineCount").get<std::uint32_t>();
      entry.sha256 = e.at("sha256").get<std::string>();
      m.entries.push_back(std::move(entry));
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed manifest: ") + e.what());
  }
  validateManifest(m);
  return m;
}

void saveManifest(const CorpusManifest& manifest, const fs::path& file) {
  util::writeFile(file, manifestToJson(manifest));
}

CorpusManifest loadManifest(const fs::path& file) {
  CorpusManifest m = manifestFromJson(util::readFile(file));
  if (fs::path(m.root).is_relative()) m.root = (file.parent_path() / m.root).lexically_normal().string();
  return m;
}

}  // namespace smartembed::corpus
