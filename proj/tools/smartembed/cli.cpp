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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdarg>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "smartembed/corpus/fetch.hpp"
#include "smartembed/corpus/index.hpp"
#include "smartembed/corpus/manifest.hpp"
#include "smartembed/detect/detector.hpp"
#include "smartembed/detect/report_json.hpp"
#include "smartembed/embedding/model_io.hpp"
#include "smartembed/embedding/trainer.hpp"
#include "smartembed/error.hpp"
#include "smartembed/frontend/normalizer.hpp"
#include "smartembed/frontend/pipeline.hpp"
#include "smartembed/service/service.hpp"
#include "smartembed/simindex/matrix_io.hpp"

namespace smartembed::cli {

namespace fs = std::filesystem;

namespace {

/// Raised for semantically invalid flag combinations found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readSource(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format(const char* fmt, ...) __attribute__((format(printf, 1, 2)));
std::string format(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

std::string trimmed(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

volatile std::sig_atomic_t gStopRequested = 0;
extern "C" void onStopSignal(int) { gStopRequested = 1; }

// ------------------------------------------------------------ options

struct IngestArgs {
  std::string dir;
  std::string out;
  bool keepDuplicates = false;
};

struct TrainArgs {
  std::string manifest;
  std::string out;
  std::string bugdb;
  embedding::HyperParams params;
  std::size_t threads = 1;
};

struct IndexArgs {
  std::string manifest, model, out, bugdb, bugOut, report;
};

struct ClonesArgs {
  std::string file, corpus, model;
  std::size_t top = detect::kDefaultTopK;
  bool json = false;
};

struct PairsArgs {
  std::string corpus;
  double threshold = -1.0;
  bool stats = false;
  bool json = false;
};

struct BugsArgs {
  std::string file, bugmat, bugdb, model;
  double threshold = detect::kDefaultBugThreshold;
  bool verbose = false;
  bool json = false;
};

struct ServeArgs {
  std::string corpus, bugmat, bugdb, model;
  std::string addr = "127.0.0.1:8080";
  std::string assets;
  std::size_t maxBody = service::kDefaultMaxBodyBytes;
};

struct SerializeArgs {
  std::string file;
  std::string level = "contract";
  bool raw = false;
};

struct FetchArgs {
  std::string address, endpoint, manifest, apiKey, linkTemplate;
  int maxRetries = 3;
};

// ------------------------------------------------------------ commands

int cmdIngest(const IngestArgs& a, std::ostream& out, std::ostream& err) {
  corpus::IngestOptions opts;
  opts.keepDuplicates = a.keepDuplicates;
  corpus::IngestReport report;
  const corpus::CorpusManifest m = corpus::ingestDirectory(a.dir, opts, &report);
  corpus::saveManifest(m, a.out);
  for (const auto& n : report.skipped) err << "warning: skipped " << n.path << ": " << n.message << "\n";
  for (const auto& n : report.duplicates) err << "note: " << n.path << " is " << n.message << "\n";
  for (const auto& n : report.warnings) err << "warning: " << n.path << ": " << n.message << "\n";
  out << "ingested " << m.entries.size() << " contracts (" << report.duplicates.size() << " duplicates, "
      << report.skipped.size() << " skipped) -> " << a.out << "\n";
  return kExitOk;
}

int cmdTrain(const TrainArgs& a, std::ostream& out, std::ostream& err) {
  try {
    a.params.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const corpus::CorpusManifest m = corpus::loadManifest(a.manifest);
  std::vector<corpus::IngestNote> failures;
  std::optional<fs::path> bugdb;
  if (!a.bugdb.empty()) bugdb = a.bugdb;
  const auto docs = corpus::trainingDocuments(m, bugdb, &failures);
  for (const auto& f : failures) err << "warning: excluded " << f.path << ": " << f.message << "\n";
  if (2 * failures.size() > m.entries.size()) {
    throw BuildFailed(std::to_string(failures.size()) + " of " + std::to_string(m.entries.size()) +
                      " files did not parse");
  }
  embedding::TrainOptions topts;
  topts.threads = a.threads;
  embedding::TrainStats stats;
  const embedding::EmbeddingModel model = embedding::train(docs, a.params, topts, &stats);
  embedding::saveModel(model, a.out);
  out << "trained on " << docs.size() << " documents: vocabulary " << model.vocabSize() << ", dim "
      << model.dim() << ", " << stats.epochLoss.size() << " epochs";
  if (!stats.epochLoss.empty()) {
    out << format(", loss %.6f -> %.6f", stats.epochLoss.front(), stats.epochLoss.back());
  }
  out << " -> " << a.out << "\n";
  return kExitOk;
}

int cmdIndex(const IndexArgs& a, std::ostream& out, std::ostream& err) {
  const corpus::CorpusManifest m = corpus::loadManifest(a.manifest);
  const embedding::EmbeddingModel model = embedding::loadModel(a.model);
  corpus::BuildOptions opts;
  if (!a.bugdb.empty()) opts.bugDatabase = a.bugdb;
  const corpus::IndexArtifacts art = corpus::buildIndex(m, opts, &model);
  simindex::saveMatrix(art.corpus, a.out);
  if (art.bugMatrix) simindex::saveMatrix(*art.bugMatrix, a.bugOut);
  if (!a.report.empty()) {
    std::ofstream(a.report) << corpus::buildReportToJson(art.report);
  }
  for (const auto& f : art.report.failures) err << "warning: excluded " << f.path << ": " << f.message << "\n";
  for (const auto& w : art.report.warnings) err << "warning: " << w << "\n";
  const auto& r = art.report;
  out << "indexed " << r.contracts << " of " << r.files << " files: " << r.subcontracts << " contracts, "
      << r.functions << " functions, " << r.statements << " statements, " << r.lines << " lines -> " << a.out
      << "\n";
  if (art.bugMatrix) out << "bug matrix: " << art.bugMatrix->size() << " records -> " << a.bugOut << "\n";
  return kExitOk;
}

int cmdClones(const ClonesArgs& a, std::ostream& out, std::ostream&) {
  const std::string src = readSource(a.file);
  const embedding::EmbeddingModel model = embedding::loadModel(a.model);
  const simindex::EmbeddingMatrix corpus = simindex::loadMatrix(a.corpus);
  const detect::CloneReport report = detect::findClones(frontend::analyzeSource(src, a.file), corpus, model, a.top);
  if (a.json) {
    out << detect::cloneReportToJson(report);
    return kExitOk;
  }
  out << format("%-4s  %-10s  %-24s  %-32s  %s\n", "rank", "similarity", "contract", "source", "link");
  for (const auto& m : report.matches) {
    out << format("%4zu  %10.6f  %-24s  %-32s  %s\n", m.rank, m.similarity, m.contractName.c_str(),
                  m.sourceRef.c_str(), m.externalLink ? m.externalLink->c_str() : "-");
  }
  if (report.matches.empty()) out << "corpus is empty\n";
  return kExitOk;
}

int cmdPairs(const PairsArgs& a, std::ostream& out, std::ostream&) {
  const simindex::EmbeddingMatrix corpus = simindex::loadMatrix(a.corpus);
  const detect::ClonePairsResult r = detect::detectClonePairs(corpus, a.threshold);
  if (a.json) {
    out << detect::clonePairsToJson(r, corpus);
    return kExitOk;
  }
  if (!a.stats) {
    out << format("%-32s  %-32s  %s\n", "first", "second", "similarity");
    for (const auto& p : r.pairs) {
      out << format("%-32s  %-32s  %10.6f\n", corpus.meta(p.first).id.c_str(), corpus.meta(p.second).id.c_str(),
                    p.similarity);
    }
  }
  const auto& s = r.stats;
  if (a.stats) {
    out << format("threshold     %.6f\n", s.threshold);
    out << format("contracts     %zu\n", corpus.size());
    out << format("clone pairs   %zu\n", s.clonePairCount);
    out << format("cloned lines  %zu of %zu\n", s.clonedLines, s.totalLines);
    out << format("clone ratio   %.6f\n", s.cloneRatio);
  } else {
    out << s.clonePairCount << " pairs at threshold " << format("%.6f", s.threshold) << "\n";
  }
  return kExitOk;
}

int cmdBugs(const BugsArgs& a, std::ostream& out, std::ostream& err) {
  const std::string src = readSource(a.file);
  const embedding::EmbeddingModel model = embedding::loadModel(a.model);
  const simindex::EmbeddingMatrix bugmat = simindex::loadMatrix(a.bugmat);
  std::vector<std::string> warnings;
  const detect::BugDatabase db = detect::loadBugDatabase(a.bugdb, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  const detect::BugReport r =
      detect::detectBugs(frontend::analyzeSource(src, a.file), bugmat, db, model, a.threshold, a.verbose);
  if (a.json) {
    out << detect::bugReportToJson(r, a.verbose);
    return kExitOk;
  }
  auto table = [&](const std::vector<detect::BugFinding>& rows) {
    out << format("%-9s  %-10s  %-12s  %s\n", "lines", "similarity", "bugId", "bugType");
    for (const auto& f : rows) {
      const std::string span = f.startLine == f.endLine ? std::to_string(f.startLine)
                                                        : std::to_string(f.startLine) + "-" + std::to_string(f.endLine);
      out << format("%-9s  %10.6f  %-12s  %s\n", span.c_str(), f.similarity, f.bugId.c_str(), f.bugType.c_str());
    }
  };
  if (r.findings.empty()) {
    out << format("no known bugs matched at threshold %.6f\n", r.thresholdUsed);
  } else {
    table(r.findings);
  }
  if (a.verbose) {
    out << "\nall matches at or above " << format("%.6f", r.thresholdUsed) << ":\n";
    table(r.allMatches);
  }
  return kExitOk;
}

int cmdServe(const ServeArgs& a, std::ostream& out, std::ostream& err) {
  const auto [host, port] = service::parseAddress(a.addr);
  service::ServiceConfig cfg;
  cfg.maxBodyBytes = a.maxBody;
  if (!a.assets.empty()) {
    cfg.assetsDir = a.assets;
  } else if (const char* env = std::getenv("SMARTEMBED_ASSETS_DIR"); env && *env) {
    cfg.assetsDir = env;
  }
  service::AnalysisService svc(cfg);
  svc.setArtifacts(std::make_shared<const service::ServiceArtifacts>(
      service::loadServiceArtifacts(a.model, a.corpus, a.bugmat, a.bugdb)));
  if (cfg.assetsDir && !fs::is_directory(*cfg.assetsDir)) {
    err << "warning: assets directory '" << cfg.assetsDir->string() << "' not found; static routes return 404\n";
  }

  service::HttpServer server(svc);
  int bound = 0;
  try {
    bound = server.bind(host, port);
  } catch (const NetworkError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  out << "listening on http://" << host << ":" << bound << "\n" << std::flush;

  gStopRequested = 0;
  auto previousInt = std::signal(SIGINT, onStopSignal);
  auto previousTerm = std::signal(SIGTERM, onStopSignal);
  std::atomic<bool> done{false};
  std::thread watcher([&] {
    while (!done.load()) {
      if (gStopRequested) {
        server.stop();
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
  });
  server.listen();
  done = true;
  watcher.join();
  std::signal(SIGINT, previousInt);
  std::signal(SIGTERM, previousTerm);
  out << "stopped\n";
  return kExitOk;
}

int cmdSerialize(const SerializeArgs& a, std::ostream& out, std::ostream& err) {
  const frontend::AnalyzedSource src = frontend::analyzeSource(readSource(a.file), a.file);
  for (const auto& w : src.parsed.warnings) err << "warning: " << w << "\n";
  if (a.level == "contract") {
    const frontend::TokenDocument doc = a.raw ? frontend::serializeContract(src.parsed.root, a.file)
                                              : frontend::contractDocument(src);
    if (doc.tokens.empty()) throw EmptyContract("'" + a.file + "' contains no code");
    out << frontend::formatDocumentLine(doc) << "\n";
    return kExitOk;
  }
  if (a.raw) {
    for (const auto& site : frontend::collectStatements(src.parsed.root)) {
      out << frontend::formatDocumentLine(frontend::serializeStatement(*site.statement, site.context, a.file)) << "\n";
    }
  } else {
    for (const auto& doc : frontend::statementDocuments(src)) out << frontend::formatDocumentLine(doc) << "\n";
  }
  return kExitOk;
}

int cmdFetch(const FetchArgs& a, std::ostream& out, std::ostream&) {
  corpus::FetchOptions opts;
  opts.endpoint = a.endpoint;
  if (!a.apiKey.empty()) opts.apiKey = a.apiKey;
  opts.linkTemplate = a.linkTemplate;
  opts.maxRetries = a.maxRetries;
  corpus::CorpusManifest m = corpus::loadManifest(a.manifest);
  const corpus::FetchedSource fetched = corpus::fetchVerifiedSource(a.address, opts);
  const corpus::ContractEntry entry = corpus::storeFetchedSource(fetched, m);
  corpus::saveManifest(m, a.manifest);
  out << "fetched " << (entry.contractName.empty() ? a.address : entry.contractName) << " -> " << entry.path
      << "\n";
  return kExitOk;
}

int exitCodeFor(const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) return kExitUsage;
  if (dynamic_cast<const SourceError*>(&e) || dynamic_cast<const EmptyContract*>(&e) ||
      dynamic_cast<const EmptyDocument*>(&e) || dynamic_cast<const EmptyCorpus*>(&e) ||
      dynamic_cast<const DegenerateVocab*>(&e) || dynamic_cast<const IoError*>(&e) ||
      dynamic_cast<const FormatVersionMismatch*>(&e) || dynamic_cast<const DimensionMismatch*>(&e) ||
      dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const NotVerified*>(&e) ||
      dynamic_cast<const BuildFailed*>(&e) || dynamic_cast<const NonFiniteInput*>(&e) ||
      dynamic_cast<const ContextError*>(&e)) {
    return kExitInput;
  }
  return kExitInternal;
}

std::string describe(const std::exception& e) {
  if (dynamic_cast<const EmptyContract*>(&e)) return std::string("EmptyContract: ") + e.what();
  if (dynamic_cast<const ParseError*>(&e)) return std::string("parse error: ") + e.what();
  if (dynamic_cast<const LexError*>(&e)) return std::string("lex error: ") + e.what();
  if (dynamic_cast<const NotVerified*>(&e)) return std::string("NotVerified: ") + e.what();
  if (dynamic_cast<const RateLimited*>(&e)) return std::string("RateLimited: ") + e.what();
  return e.what();
}

}  // namespace

std::vector<std::string> configArguments(const std::string& configText, const std::vector<std::string>& args,
                                         const std::vector<std::string>& valueOptions,
                                         const std::vector<std::string>& flagOptions) {
  auto given = [&](const std::string& name) {
    for (const auto& a : args) {
      if (a == "--" + name || a.rfind("--" + name + "=", 0) == 0) return true;
    }
    return false;
  };
  auto contains = [](const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
  };
  std::vector<std::string> extra;
  std::istringstream in(configText);
  std::string line;
  for (int lineNo = 1; std::getline(in, line); ++lineNo) {
    line = trimmed(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineNo) + ": expected key = value");
    }
    std::string key = trimmed(line.substr(0, eq));
    std::string value = trimmed(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    if (given(key)) continue;
    if (contains(valueOptions, key)) {
      extra.push_back("--" + key);
      extra.push_back(value);
    } else if (contains(flagOptions, key)) {
      if (value == "true" || value == "1" || value == "yes" || value == "on") {
        extra.push_back("--" + key);
      } else if (!(value == "false" || value == "0" || value == "no" || value == "off")) {
        throw UsageError("config key '" + key + "' expects true or false");
      }
    }
    // keys for other subcommands are ignored
  }
  return extra;
}

int run(const std::vector<std::string>& argsIn, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = argsIn;
  std::optional<std::string> configPath;
  for (std::size_t i = 1; i < args.size();) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      configPath = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
    } else if (args[i].rfind("--config=", 0) == 0) {
      configPath = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  CLI::App app{"Clone and bug detection for Solidity smart contracts using code embeddings.", "smartembed"};
  app.set_version_flag("--version", corpus::toolVersion());
  std::string configDoc;
  app.add_option("--config", configDoc,
                 "Flat 'key = value' file supplying flag values (command-line flags take precedence)");
  app.footer("Exit codes: 0 success, 1 usage error, 2 input or parse error, 3 internal error.");

  IngestArgs ingest;
  auto* cIngest = app.add_subcommand("ingest", "Collect *.sol files under a directory into a manifest");
  cIngest->add_option("dir", ingest.dir, "Corpus root directory")->required();
  cIngest->add_option("--out", ingest.out, "Manifest file to write")->required();
  cIngest->add_flag("--keep-duplicates", ingest.keepDuplicates, "Keep byte-identical files");

  TrainArgs train;
  auto* cTrain = app.add_subcommand("train", "Train the subword embedding model on a manifest");
  cTrain->add_option("--manifest", train.manifest, "Corpus manifest")->required();
  cTrain->add_option("--out", train.out, "Model file to write")->required();
  cTrain->add_option("--bugdb", train.bugdb, "Bug database whose source files join the training corpus");
  cTrain->add_option("--dim", train.params.dim, "Embedding dimension")->capture_default_str()->check(CLI::Range(1u, 4096u));
  cTrain->add_option("--window", train.params.windowSize, "Context window size")
      ->capture_default_str()->check(CLI::Range(1u, 100u));
  cTrain->add_option("--negatives", train.params.negativeSamples, "Negative samples per context")
      ->capture_default_str()->check(CLI::Range(1u, 100u));
  cTrain->add_option("--min-count", train.params.minCount, "Minimum token frequency")->capture_default_str();
  cTrain->add_option("--ngram-min", train.params.ngramMin, "Shortest character n-gram")
      ->capture_default_str()->check(CLI::Range(1u, 32u));
  cTrain->add_option("--ngram-max", train.params.ngramMax, "Longest character n-gram")
      ->capture_default_str()->check(CLI::Range(1u, 32u));
  cTrain->add_option("--buckets", train.params.bucketCount, "N-gram hash buckets")
      ->capture_default_str()->check(CLI::Range(1u, 1u << 30));
  cTrain->add_option("--epochs", train.params.epochs, "Training epochs")->capture_default_str()->check(CLI::Range(1u, 10000u));
  cTrain->add_option("--lr", train.params.initialLearningRate, "Initial learning rate")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cTrain->add_option("--seed", train.params.seed, "Random seed")->capture_default_str();
  cTrain->add_option("--threads", train.threads, "Training threads (1 = deterministic)")
      ->capture_default_str()->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  IndexArgs index;
  auto* cIndex = app.add_subcommand("index", "Embed every manifest entry into matrix C (and bug records into B)");
  cIndex->add_option("--manifest", index.manifest, "Corpus manifest")->required();
  cIndex->add_option("--model", index.model, "Trained model")->required();
  cIndex->add_option("--out", index.out, "Corpus matrix file to write")->required();
  auto* bugdbOpt = cIndex->add_option("--bugdb", index.bugdb, "Bug database (TSV)");
  auto* bugOutOpt = cIndex->add_option("--bug-out", index.bugOut, "Bug matrix file to write");
  bugdbOpt->needs(bugOutOpt);
  bugOutOpt->needs(bugdbOpt);
  cIndex->add_option("--report", index.report, "Write the build report as JSON");

  ClonesArgs clones;
  auto* cClones = app.add_subcommand("clones", "Top-k most similar corpus contracts for a file");
  cClones->add_option("--file", clones.file, "Solidity source")->required();
  cClones->add_option("--corpus", clones.corpus, "Corpus matrix")->required();
  cClones->add_option("--model", clones.model, "Trained model")->required();
  cClones->add_option("--top", clones.top, "Number of matches")->capture_default_str()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  cClones->add_flag("--json", clones.json, "Print JSON");

  PairsArgs pairs;
  auto* cPairs = app.add_subcommand("pairs", "All corpus clone pairs at or above a threshold");
  cPairs->add_option("--corpus", pairs.corpus, "Corpus matrix")->required();
  cPairs->add_option("--threshold", pairs.threshold, "Clone threshold delta in [0, 1] (no default)")
      ->required()->check(CLI::Range(0.0, 1.0));
  cPairs->add_flag("--stats", pairs.stats, "Print clone-ratio statistics instead of the pair list");
  cPairs->add_flag("--json", pairs.json, "Print JSON");

  BugsArgs bugs;
  auto* cBugs = app.add_subcommand("bugs", "Statements similar to known bugs");
  cBugs->add_option("--file", bugs.file, "Solidity source")->required();
  cBugs->add_option("--bugmat", bugs.bugmat, "Bug matrix")->required();
  cBugs->add_option("--bugdb", bugs.bugdb, "Bug database (TSV)")->required();
  cBugs->add_option("--model", bugs.model, "Trained model")->required();
  cBugs->add_option("--threshold", bugs.threshold, "Bug threshold theta in [0, 1]")
      ->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cBugs->add_flag("--verbose", bugs.verbose, "Also list every match at or above the threshold");
  cBugs->add_flag("--json", bugs.json, "Print JSON");

  ServeArgs serve;
  auto* cServe = app.add_subcommand("serve", "Run the HTTP analysis service");
  cServe->add_option("--corpus", serve.corpus, "Corpus matrix")->required();
  cServe->add_option("--bugmat", serve.bugmat, "Bug matrix")->required();
  cServe->add_option("--bugdb", serve.bugdb, "Bug database (TSV)")->required();
  cServe->add_option("--model", serve.model, "Trained model")->required();
  cServe->add_option("--addr", serve.addr, "Listen address host:port (port 0 picks one)")->capture_default_str();
  cServe->add_option("--assets", serve.assets, "Static bundle directory (default: $SMARTEMBED_ASSETS_DIR)");
  cServe->add_option("--max-body", serve.maxBody, "Request body limit in bytes")
      ->capture_default_str()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30));

  SerializeArgs ser;
  auto* cSer = app.add_subcommand("serialize", "Print the token documents of a file");
  cSer->add_option("--file", ser.file, "Solidity source")->required();
  cSer->add_option("--level", ser.level, "contract or statement")
      ->capture_default_str()->check(CLI::IsMember({"contract", "statement"}));
  cSer->add_flag("--raw", ser.raw, "Skip normalization");

  FetchArgs fetch;
  auto* cFetch = app.add_subcommand("fetch", "Download a verified contract into a corpus manifest");
  cFetch->add_option("address", fetch.address, "Contract address (0x + 40 hex digits)")->required();
  cFetch->add_option("--endpoint", fetch.endpoint, "Explorer-compatible API endpoint URL")->required();
  cFetch->add_option("--manifest", fetch.manifest, "Manifest to update")->required();
  cFetch->add_option("--api-key", fetch.apiKey, "API key");
  cFetch->add_option("--link-template", fetch.linkTemplate, "External link pattern; {address} is substituted");
  cFetch->add_option("--max-retries", fetch.maxRetries, "Retries after rate limiting")
      ->capture_default_str()->check(CLI::Range(0, 20));

  app.require_subcommand(1);

  if (args.size() <= 1) {
    err << app.help();
    return kExitUsage;
  }

  try {
    if (configPath) {
      std::ifstream cf(*configPath);
      if (!cf) {
        err << "error: cannot read config file '" << *configPath << "'\n";
        return kExitUsage;
      }
      std::stringstream text;
      text << cf.rdbuf();
      CLI::App* sub = nullptr;
      for (std::size_t i = 1; i < args.size() && !sub; ++i) {
        for (CLI::App* s : app.get_subcommands([](CLI::App*) { return true; })) {
          if (s->get_name() == args[i]) sub = s;
        }
      }
      if (sub) {
        std::vector<std::string> values, flags;
        for (const CLI::Option* o : sub->get_options()) {
          if (o->get_positional() || o->get_lnames().empty()) continue;
          (o->get_items_expected_max() == 0 ? flags : values).push_back(o->get_lnames().front());
        }
        const auto extra = configArguments(text.str(), args, values, flags);
        args.insert(args.end(), extra.begin(), extra.end());
      }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cIngest->parsed()) return cmdIngest(ingest, out, err);
    if (cTrain->parsed()) return cmdTrain(train, out, err);
    if (cIndex->parsed()) return cmdIndex(index, out, err);
    if (cClones->parsed()) return cmdClones(clones, out, err);
    if (cPairs->parsed()) return cmdPairs(pairs, out, err);
    if (cBugs->parsed()) return cmdBugs(bugs, out, err);
    if (cServe->parsed()) return cmdServe(serve, out, err);
    if (cSer->parsed()) return cmdSerialize(ser, out, err);
    if (cFetch->parsed()) return cmdFetch(fetch, out, err);
  } catch (const std::exception& e) {
    err << "error: " << describe(e) << "\n";
    return exitCodeFor(e);
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace smartembed::cli
