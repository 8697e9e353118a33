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

#include "smartembed/corpus/fetch.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "smartembed/error.hpp"
#include "util/file_io.hpp"

namespace smartembed::corpus {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint splitEndpoint(const std::string& url) {
  const std::size_t scheme = url.find("://");
  if (scheme == std::string::npos || scheme == 0) {
    throw InvalidArgument("endpoint '" + url + "' must be an absolute http(s) URL");
  }
  const std::size_t slash = url.find('/', scheme + 3);
  Endpoint e;
  e.origin = url.substr(0, slash);
  e.path = slash == std::string::npos ? "/" : url.substr(slash);
  if (e.origin.size() <= scheme + 3) throw InvalidArgument("endpoint '" + url + "' has no host");
  return e;
}

// One in-flight request per endpoint.
std::mutex& endpointLock(const std::string& origin) {
  static std::mutex guard;
  static std::map<std::string, std::unique_ptr<std::mutex>> locks;
  std::lock_guard<std::mutex> lock(guard);
  auto& m = locks[origin];
  if (!m) m = std::make_unique<std::mutex>();
  return *m;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Verified sources come either as plain text or as a standard-JSON input
// (optionally wrapped in an extra pair of braces); files are concatenated
// in name order.
std::string flattenSource(const std::string& raw) {
  std::string text = raw;
  if (text.size() >= 4 && text.rfind("{{", 0) == 0 && text.compare(text.size() - 2, 2, "}}") == 0) {
    text = text.substr(1, text.size() - 2);
  }
  if (text.empty() || text.front() != '{') return raw;
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return raw;
  const json& files = j.contains("sources") ? j["sources"] : j;
  std::string out;
  for (const auto& [name, file] : files.items()) {
    if (!file.is_object() || !file.contains("content") || !file["content"].is_string()) continue;
    out += "// File: " + name + "\n" + file["content"].get<std::string>();
    if (!out.empty() && out.back() != '\n') out.push_back('\n');
  }
  return out.empty() ? raw : out;
}

std::chrono::milliseconds retryDelay(const httplib::Result& res, int attempt, const FetchOptions& options) {
  std::chrono::milliseconds wait(1000LL * attempt);
  if (res && res->has_header("Retry-After")) {
    try {
      wait = std::chrono::seconds(std::stoll(res->get_header_value("Retry-After")));
    } catch (const std::exception&) {
      // HTTP-date form: fall back to linear backoff
    }
  }
  return std::clamp(wait, std::chrono::milliseconds(0), options.maxRetryWait);
}

}  // namespace

FetchedSource fetchVerifiedSource(const std::string& address, const FetchOptions& options) {
  if (!isValidAddress(address)) throw InvalidArgument("malformed address '" + address + "'");
  const Endpoint ep = splitEndpoint(options.endpoint);

  httplib::Client client(ep.origin);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_follow_location(true);

  httplib::Params params{{"module", "contract"}, {"action", "getsourcecode"}, {"address", address}};
  if (options.apiKey) params.emplace("apikey", *options.apiKey);

  std::lock_guard<std::mutex> inFlight(endpointLock(ep.origin));
  for (int attempt = 1;; ++attempt) {
    httplib::Result res = client.Get(ep.path, params, httplib::Headers{});
    if (!res) throw NetworkError(options.endpoint + ": " + httplib::to_string(res.error()));

    bool limited = res->status == 429;
    json body;
    if (!limited) {
      if (res->status != 200) throw NetworkError(options.endpoint + ": HTTP " + std::to_string(res->status));
      body = json::parse(res->body, nullptr, false);
      if (body.is_discarded() || !body.is_object()) throw NetworkError(options.endpoint + ": malformed response");
      const json& result = body.contains("result") ? body["result"] : json();
      limited = result.is_string() && lower(result.get<std::string>()).find("rate limit") != std::string::npos;
    }
    if (limited) {
      if (attempt > options.maxRetries) {
        throw RateLimited(options.endpoint + ": rate limited after " + std::to_string(attempt) + " attempts");
      }
      std::this_thread::sleep_for(retryDelay(res, attempt, options));
      continue;
    }

    const json& result = body["result"];
    if (!result.is_array()) {
      const std::string msg = result.is_string() ? result.get<std::string>() : body.value("message", "");
      throw NetworkError(options.endpoint + ": unexpected response: " + msg);
    }
    if (result.empty() || !result[0].is_object()) throw NotVerified(address + ": no source returned");
    const json& item = result[0];
    const std::string source = item.value("SourceCode", "");
    if (source.empty()) throw NotVerified(address + ": contract source is not verified");

    FetchedSource out;
    out.address = address;
    out.contractName = item.value("ContractName", "");
    out.source = flattenSource(source);
    if (!options.linkTemplate.empty()) {
      std::string link = options.linkTemplate;
      for (std::size_t pos; (pos = link.find("{address}")) != std::string::npos;) link.replace(pos, 9, address);
      out.externalLink = link;
    }
    return out;
  }
}

ContractEntry storeFetchedSource(const FetchedSource& fetched, CorpusManifest& manifest) {
  if (!isValidAddress(fetched.address)) throw InvalidArgument("malformed address '" + fetched.address + "'");
  const std::string rel = "fetched/" + lower(fetched.address) + ".sol";
  const fs::path file = fs::path(manifest.root) / rel;
  util::writeFile(file, fetched.source);

  json meta = {{"contractName", fetched.contractName},
               {"address", fetched.address},
               {"externalLink", fetched.externalLink ? json(*fetched.externalLink) : json(nullptr)}};
  fs::path sidecar = file;
  sidecar += ".meta.json";
  util::writeFile(sidecar, meta.dump(2) + "\n");

  ContractEntry entry;
  entry.path = rel;
  entry.contractName = fetched.contractName.empty() ? guessContractName(fetched.source, lower(fetched.address))
                                                    : fetched.contractName;
  entry.address = fetched.address;
  entry.externalLink = fetched.externalLink;
  entry.lineCount = countLines(fetched.source);
  entry.sha256 = sha256Hex(fetched.source);

  auto& entries = manifest.entries;
  auto same = std::find_if(entries.begin(), entries.end(), [&](const ContractEntry& e) { return e.path == rel; });
  if (same != entries.end()) {
    *same = entry;
    return entry;
  }
  if (!manifest.allowDuplicates) {
    auto dup = std::find_if(entries.begin(), entries.end(),
                            [&](const ContractEntry& e) { return e.sha256 == entry.sha256; });
    if (dup != entries.end()) return *dup;
  }
  entries.push_back(entry);
  std::sort(entries.begin(), entries.end(),
            [](const ContractEntry& a, const ContractEntry& b) { return a.path < b.path; });
  return entry;
}

}  // namespace smartembed::corpus
