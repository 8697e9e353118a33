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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "smartembed/detect/bug_database.hpp"
#include "smartembed/embedding/model.hpp"
#include "smartembed/simindex/matrix.hpp"

namespace smartembed::service {

inline constexpr std::size_t kDefaultMaxBodyBytes = 1 << 20;

/// Everything an analyze request reads. Never mutated once published.
struct ServiceArtifacts {
  embedding::EmbeddingModel model;
  simindex::EmbeddingMatrix corpus;
  simindex::EmbeddingMatrix bugMatrix;
  detect::BugDatabase bugs;
};

/// Loads and cross-checks the four artifact files (dimensions, B/db rows).
ServiceArtifacts loadServiceArtifacts(const std::filesystem::path& model, const std::filesystem::path& corpus,
                                      const std::filesystem::path& bugMatrix,
                                      const std::filesystem::path& bugDatabase);

struct ServiceConfig {
  std::size_t maxBodyBytes = kDefaultMaxBodyBytes;
  /// Static bundle directory; when unset or missing, static routes 404.
  std::optional<std::filesystem::path> assetsDir;
};

struct HttpRequest {
  std::string method;
  std::string path;
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string contentType = "application/json";
  std::string body;
};

/// Request handling without any socket; the HTTP server is a thin adapter.
class AnalysisService {
 public:
  explicit AnalysisService(ServiceConfig config = {});

  /// Publishes artifacts; before the first call health reports 503.
  void setArtifacts(std::shared_ptr<const ServiceArtifacts> artifacts);
  bool ready() const;
  const ServiceConfig& config() const noexcept { return config_; }

  HttpResponse handle(const HttpRequest& request) const;

  HttpResponse analyze(std::string_view body) const;
  HttpResponse health() const;
  HttpResponse staticAsset(std::string_view path) const;

 private:
  std::shared_ptr<const ServiceArtifacts> snapshot() const;

  ServiceConfig config_;
  mutable std::mutex mutex_;
  std::shared_ptr<const ServiceArtifacts> artifacts_;
};

/// JSON error body {error, message[, line, column]}.
HttpResponse errorResponse(int status, std::string_view code, std::string_view message,
                           std::optional<int> line = std::nullopt, std::optional<int> column = std::nullopt);

/// Blocking HTTP/1.1 listener over an AnalysisService.
class HttpServer {
 public:
  explicit HttpServer(const AnalysisService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds host:port (port 0 picks a free one) and returns the bound port.
  /// Throws NetworkError when binding fails.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void listen();
  /// Blocks until a concurrent listen() accepts connections.
  void waitUntilReady() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Splits "host:port"; a bare port means 127.0.0.1. Throws InvalidArgument.
std::pair<std::string, int> parseAddress(std::string_view addr);

}  // namespace smartembed::service
