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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smartembed::corpus {

struct ContractEntry {
  std::string path;  // relative to the manifest root, '/'-separated
  std::string contractName;
  std::optional<std::string> address;       // 0x + 40 hex digits
  std::optional<std::string> externalLink;
  std::uint32_t lineCount = 1;
  std::string sha256;  // lowercase hex of the file bytes

  bool operator==(const ContractEntry&) const = default;
};

struct CorpusManifest {
  std::string root;
  std::vector<ContractEntry> entries;
  std::string createdAt;  // ISO-8601 UTC
  std::string toolVersion;
  bool allowDuplicates = false;  // ingested with keepDuplicates

  std::filesystem::path pathOf(const ContractEntry& entry) const;
};

struct IngestOptions {
  bool keepDuplicates = false;
};

struct IngestNote {
  std::string path;
  std::string message;
};

struct IngestReport {
  std::vector<IngestNote> skipped;     // unreadable files
  std::vector<IngestNote> duplicates;  // byte-identical to an earlier entry
  std::vector<IngestNote> warnings;    // bad sidecar fields and the like
};

/// Recursively collects `*.sol` under `root` in path order. A sidecar
/// `<file>.meta.json` may supply contractName, address and externalLink.
/// Throws InvalidArgument when root is not a directory, EmptyCorpus when no
/// file survives.
CorpusManifest ingestDirectory(const std::filesystem::path& root, const IngestOptions& options = {},
                               IngestReport* report = nullptr);

bool isValidAddress(std::string_view address) noexcept;
std::string sha256Hex(std::string_view bytes);
/// Number of lines, counting a final line without a newline; at least 1.
std::uint32_t countLines(std::string_view text) noexcept;
/// Name of the last contract, library or interface declared in `source`,
/// or `fallback` when none is found or the text does not lex.
std::string guessContractName(std::string_view source, const std::string& fallback);

std::string toolVersion();
std::string manifestToJson(const CorpusManifest& manifest);
/// Throws InvalidArgument on malformed JSON or a violated invariant.
CorpusManifest manifestFromJson(std::string_view json);
/// A relative root is resolved against the manifest file's directory.
void saveManifest(const CorpusManifest& manifest, const std::filesystem::path& file);
CorpusManifest loadManifest(const std::filesystem::path& file);

/// Throws InvalidArgument unless paths are unique, addresses well formed,
/// lineCount ≥ 1, and hashes unique (when duplicates are not allowed).
void validateManifest(const CorpusManifest& manifest);

}  // namespace smartembed::corpus
