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

#include <chrono>
#include <optional>
#include <string>

#include "smartembed/corpus/manifest.hpp"

namespace smartembed::corpus {

struct FetchOptions {
  /// Explorer-API-compatible endpoint, e.g. "http://127.0.0.1:8080/api".
  std::string endpoint;
  std::optional<std::string> apiKey;
  /// Link stored in the sidecar; "{address}" is substituted. Empty = none.
  std::string linkTemplate;
  int maxRetries = 3;
  std::chrono::milliseconds maxRetryWait{60000};
  std::chrono::seconds timeout{30};
};

struct FetchedSource {
  std::string address;
  std::string contractName;
  std::string source;
  std::optional<std::string> externalLink;
};

/// GET <endpoint>?module=contract&action=getsourcecode&address=..[&apikey=..].
/// The address is validated before any request. RateLimited once retries are
/// exhausted, NotVerified on an empty source, NetworkError otherwise.
FetchedSource fetchVerifiedSource(const std::string& address, const FetchOptions& options);

/// Writes `fetched/<address>.sol` plus its sidecar under the manifest root
/// and adds or replaces the entry. Returns the stored entry.
ContractEntry storeFetchedSource(const FetchedSource& fetched, CorpusManifest& manifest);

}  // namespace smartembed::corpus
