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

#include "smartembed/service/service.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "smartembed/corpus/manifest.hpp"
#include "smartembed/detect/detector.hpp"
#include "smartembed/embedding/model_io.hpp"
#include "smartembed/error.hpp"
#include "smartembed/frontend/pipeline.hpp"
#include "smartembed/simindex/matrix_io.hpp"
#include "util/file_io.hpp"

namespace smartembed::service {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kMaxTopK = 1000;

HttpResponse jsonResponse(int status, const json& body) {
  HttpResponse r;
  r.status = status;
  r.body = body.dump() + "\n";
  return r;
}

HttpResponse notFound() {
  HttpResponse r;
  r.status = 404;
  r.contentType = "text/plain; charset=utf-8";
  r.body = "Not Found\n";
  return r;
}

std::string contentTypeFor(const fs::path& p) {
  static const std::pair<const char*, const char*> kTypes[] = {
      {".html", "text/html; charset=utf-8"}, {".js", "text/javascript; charset=utf-8"},
      {".mjs", "text/javascript; charset=utf-8"}, {".css", "text/css; charset=utf-8"},
      {".json", "application/json"}, {".map", "application/json"},
      {".svg", "image/svg+xml"}, {".png", "image/png"},
      {".ico", "image/x-icon"}, {".txt", "text/plain; charset=utf-8"},
      {".woff2", "font/woff2"},
  };
  const std::string ext = p.extension().string();
  for (const auto& [e, type] : kTypes) {
    if (ext == e) return type;
  }
  return "application/octet-stream";
}

json cloneJson(const detect::CloneMatch& m) {
  return {{"rank", m.rank},
          {"contractName", m.contractName},
          {"similarity", m.similarity},
          {"externalLink", m.externalLink ? json(*m.externalLink) : json(nullptr)}};
}

json bugJson(const detect::BugFinding& f) {
  return {{"startLine", f.startLine},
          {"endLine", f.endLine},
          {"bugType", f.bugType},
          {"bugId", f.bugId},
          {"similarity", f.similarity}};
}

const char* codeForStatus(int status) {
  switch (status) {
    case 400: return "bad_request";
    case 404: return "not_found";
    case 405: return "method_not_allowed";
    case 413: return "payload_too_large";
    case 422: return "unprocessable";
    case 503: return "unavailable";
    default: return status >= 500 ? "internal_error" : "error";
  }
}

}  // namespace

HttpResponse errorResponse(int status, std::string_view code, std::string_view message, std::optional<int> line,
                           std::optional<int> column) {
  json body = {{"error", code}, {"message", message}};
  if (line) body["line"] = *line;
  if (column) body["column"] = *column;
  return jsonResponse(status, body);
}

ServiceArtifacts loadServiceArtifacts(const fs::path& model, const fs::path& corpus, const fs::path& bugMatrix,
                                      const fs::path& bugDatabase) {
  ServiceArtifacts a;
  a.model = embedding::loadModel(model);
  a.corpus = simindex::loadMatrix(corpus);
  a.bugMatrix = simindex::loadMatrix(bugMatrix);
  a.bugs = detect::loadBugDatabase(bugDatabase);
  for (const auto* m : {&a.corpus, &a.bugMatrix}) {
    if (!m->empty() && m->dim() != a.model.dim()) throw DimensionMismatch(a.model.dim(), m->dim());
  }
  if (a.bugMatrix.size() != a.bugs.size()) {
    throw InvalidArgument("bug matrix has " + std::to_string(a.bugMatrix.size()) + " rows but '" +
                          bugDatabase.string() + "' has " + std::to_string(a.bugs.size()) + " records");
  }
  for (std::size_t i = 0; i < a.bugs.size(); ++i) {
    if (a.bugMatrix.meta(i).id != a.bugs.records()[i].bugId) {
      throw InvalidArgument("bug matrix row " + std::to_string(i) + " does not match bug database record '" +
                            a.bugs.records()[i].bugId + "'; rebuild the bug matrix");
    }
  }
  return a;
}

AnalysisService::AnalysisService(ServiceConfig config) : config_(std::move(config)) {}

void AnalysisService::setArtifacts(std::shared_ptr<const ServiceArtifacts> artifacts) {
  std::lock_guard<std::mutex> lock(mutex_);
  artifacts_ = std::move(artifacts);
}

std::shared_ptr<const ServiceArtifacts> AnalysisService::snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return artifacts_;
}

bool AnalysisService::ready() const { return snapshot() != nullptr; }

HttpResponse AnalysisService::handle(const HttpRequest& request) const {
  const std::string_view path = request.path;
  if (path.rfind("/api/", 0) == 0 || path == "/api") {
    if (path == "/api/v1/analyze") {
      if (request.method != "POST") return errorResponse(405, "method_not_allowed", "use POST");
      return analyze(request.body);
    }
    if (path == "/api/v1/health") {
      if (request.method != "GET") return errorResponse(405, "method_not_allowed", "use GET");
      return health();
    }
    return errorResponse(404, "not_found", "no such endpoint: " + std::string(path));
  }
  if (request.method != "GET" && request.method != "HEAD") return notFound();
  return staticAsset(path);
}

HttpResponse AnalysisService::analyze(std::string_view body) const {
  const auto artifacts = snapshot();
  if (!artifacts) return errorResponse(503, "unavailable", "artifacts are still loading");
  if (body.size() > config_.maxBodyBytes) {
    return errorResponse(413, "payload_too_large",
                         "request body exceeds " + std::to_string(config_.maxBodyBytes) + " bytes");
  }

  const json req = json::parse(body, nullptr, false);
  if (req.is_discarded()) return errorResponse(400, "bad_request", "request body is not valid JSON");
  if (!req.is_object()) return errorResponse(400, "bad_request", "request body must be a JSON object");

  auto source = req.find("source");
  if (source == req.end() || !source->is_string() || source->get_ref<const std::string&>().empty()) {
    return errorResponse(400, "bad_request", "'source' must be a non-empty string");
  }
  std::size_t topK = detect::kDefaultTopK;
  if (auto k = req.find("topK"); k != req.end() && !k->is_null()) {
    if (!k->is_number_integer() || k->get<long long>() < 1 || k->get<long long>() > static_cast<long long>(kMaxTopK)) {
      return errorResponse(400, "bad_request", "'topK' must be an integer in [1, " + std::to_string(kMaxTopK) + "]");
    }
    topK = k->get<std::size_t>();
  }
  double theta = detect::kDefaultBugThreshold;
  if (auto t = req.find("bugThreshold"); t != req.end() && !t->is_null()) {
    if (!t->is_number() || !(t->get<double>() >= 0.0 && t->get<double>() <= 1.0)) {
      return errorResponse(400, "bad_request", "'bugThreshold' must be a number in [0, 1]");
    }
    theta = t->get<double>();
  }

  try {
    const frontend::AnalyzedSource analyzed = frontend::analyzeSource(source->get<std::string>(), "submitted");
    const detect::CloneReport clones = detect::findClones(analyzed, artifacts->corpus, artifacts->model, topK);
    const detect::BugReport bugs =
        detect::detectBugs(analyzed, artifacts->bugMatrix, artifacts->bugs, artifacts->model, theta);

    json out = {{"clones", json::array()}, {"bugs", json::array()}, {"parseWarnings", analyzed.parsed.warnings}};
    for (const auto& m : clones.matches) out["clones"].push_back(cloneJson(m));
    for (const auto& f : bugs.findings) out["bugs"].push_back(bugJson(f));
    return jsonResponse(200, out);
  } catch (const SourceError& e) {
    return errorResponse(422, "parse_error", e.what(), e.line(), e.column());
  } catch (const EmptyContract& e) {
    return errorResponse(422, "empty_contract", e.what());
  } catch (const std::exception& e) {
    return errorResponse(500, "internal_error", e.what());
  }
}

HttpResponse AnalysisService::health() const {
  const auto artifacts = snapshot();
  if (!artifacts) {
    return jsonResponse(503, {{"status", "loading"}, {"error", "unavailable"}, {"message", "artifacts are still loading"}});
  }
  return jsonResponse(200, {{"status", "ok"},
                            {"modelDim", artifacts->model.dim()},
                            {"corpusRows", artifacts->corpus.size()},
                            {"bugRows", artifacts->bugMatrix.size()},
                            {"toolVersion", corpus::toolVersion()}});
}

HttpResponse AnalysisService::staticAsset(std::string_view path) const {
  if (!config_.assetsDir) return notFound();
  std::error_code ec;
  const fs::path root = fs::weakly_canonical(*config_.assetsDir, ec);
  if (ec || !fs::is_directory(root, ec)) return notFound();

  std::string rel(path);
  if (const auto q = rel.find_first_of("?#"); q != std::string::npos) rel.erase(q);
  while (!rel.empty() && rel.front() == '/') rel.erase(0, 1);
  const fs::path relPath = fs::path(rel).lexically_normal();
  for (const auto& part : relPath) {
    if (part == "..") return notFound();
  }
  fs::path file = rel.empty() ? root / "index.html" : root / relPath;
  if (fs::is_directory(file, ec)) file /= "index.html";
  if (!fs::is_regular_file(file, ec)) return notFound();

  HttpResponse r;
  try {
    r.body = util::readFile(file);
  } catch (const IoError&) {
    return notFound();
  }
  r.contentType = contentTypeFor(file);
  return r;
}

std::pair<std::string, int> parseAddress(std::string_view addr) {
  std::string host = "127.0.0.1";
  std::string_view portText = addr;
  if (const auto colon = addr.rfind(':'); colon != std::string_view::npos) {
    host = std::string(addr.substr(0, colon));
    portText = addr.substr(colon + 1);
    if (host.size() >= 2 && host.front() == '[' && host.back() == ']') host = host.substr(1, host.size() - 2);
    if (host.empty()) throw InvalidArgument("address '" + std::string(addr) + "' has an empty host");
  }
  int port = -1;
  const auto [end, err] = std::from_chars(portText.data(), portText.data() + portText.size(), port);
  if (err != std::errc() || end != portText.data() + portText.size() || port < 0 || port > 65535) {
    throw InvalidArgument("address '" + std::string(addr) + "' needs a port in [0, 65535]");
  }
  return {host, port};
}

struct HttpServer::Impl {
  const AnalysisService& service;
  httplib::Server server;

  explicit Impl(const AnalysisService& s) : service(s) {
    server.set_payload_max_length(service.config().maxBodyBytes);
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
      const HttpResponse out = service.handle({req.method, req.path, req.body});
      res.status = out.status;
      res.set_content(out.body, out.contentType);
    };
    server.Get(".*", route);
    server.Post(".*", route);
    server.Put(".*", route);
    server.Delete(".*", route);
    server.Patch(".*", route);
    // Rejections raised by the transport itself (oversized or malformed requests).
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return;
      const HttpResponse out = errorResponse(res.status, codeForStatus(res.status), httplib::status_message(res.status));
      res.set_content(out.body, out.contentType);
    });
    server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
      std::string msg = "unhandled error";
      try {
        if (ep) std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        msg = e.what();
      } catch (...) {
      }
      const HttpResponse out = errorResponse(500, "internal_error", msg);
      res.status = 500;
      res.set_content(out.body, out.contentType);
    });
  }
};

HttpServer::HttpServer(const AnalysisService& service) : impl_(std::make_unique<Impl>(service)) {}
HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw NetworkError("cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw NetworkError("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::waitUntilReady() const { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace smartembed::service
