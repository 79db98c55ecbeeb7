// Copyright 2026 The trustir Authors
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

#include <climits>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trustir/errors.hpp"
#include "trustir/pipeline.hpp"
#include "trustir/text.hpp"
#include "trustir/trust_engine.hpp"

namespace {

using trustir::Error;

constexpr long long kUnsetNow = LLONG_MIN;

struct Options {
  std::string corpus;
  std::string cache;
  std::string policy;
  long long ttl = 86400;
  std::size_t k = 10;
  double min_trust = std::nan("");
  bool baseline = false;
  long long now = kUnsetNow;
};

// The optional config file carries the same keys as the flags; flags given
// on the command line win.
void apply_config_file(const std::string& path, Options* opts) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CLI::ValidationError("--config", std::string("invalid config file: ") + e.what());
  }
  if (!j.is_object()) throw CLI::ValidationError("--config", "config file must hold one object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const nlohmann::json& value = item.value();
    try {
      if (key == "corpus") opts->corpus = value.get<std::string>();
      else if (key == "cache") opts->cache = value.get<std::string>();
      else if (key == "policy") opts->policy = value.get<std::string>();
      else if (key == "ttl") opts->ttl = value.get<long long>();
      else if (key == "k") opts->k = value.get<std::size_t>();
      else if (key == "min_trust") opts->min_trust = value.get<double>();
      else if (key == "baseline") opts->baseline = value.get<bool>();
      else if (key == "now") opts->now = value.get<long long>();
      else throw CLI::ValidationError("--config", "unknown config key '" + key + "'");
    } catch (const nlohmann::json::exception&) {
      throw CLI::ValidationError("--config", "bad value for config key '" + key + "'");
    }
  }
}

trustir::RunConfig to_run_config(const Options& opts) {
  trustir::RunConfig cfg;
  cfg.corpus_path = opts.corpus;
  cfg.cache_path = opts.cache;
  if (!opts.policy.empty()) cfg.policy_path = opts.policy;
  cfg.ttl_seconds = opts.ttl;
  cfg.k = opts.k;
  if (!std::isnan(opts.min_trust)) cfg.trust.min_trust_filter = opts.min_trust;
  cfg.baseline = opts.baseline;
  if (opts.now != kUnsetNow) cfg.now_epoch = opts.now;
  return cfg;
}

long long now_or_clock(long long now) {
  return now == kUnsetNow ? static_cast<long long>(std::time(nullptr)) : now;
}

// Required paths are checked after parsing so the config file can supply
// them; CLI11-level ->required() would reject config-driven invocations.
void add_common(CLI::App* cmd, Options* opts) {
  cmd->add_option("--corpus", opts->corpus, "corpus file (one record per line)");
  cmd->add_option("--cache", opts->cache, "trust cache file");
  cmd->add_option("--ttl", opts->ttl, "cache freshness threshold, seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--now", opts->now, "fixed evaluation time, epoch seconds");
}

int require_paths(const Options& opts, bool need_corpus, bool need_cache) {
  if (need_corpus && opts.corpus.empty()) {
    std::cerr << "--corpus is required (flag or config file)\n";
    return 1;
  }
  if (need_cache && opts.cache.empty()) {
    std::cerr << "--cache is required (flag or config file)\n";
    return 1;
  }
  return 0;
}

int run_ingest(const Options& opts) {
  trustir::CorpusStore corpus = trustir::ingest_corpus(opts.corpus);
  trustir::LinkGraph graph = trustir::build_link_graph(corpus);
  trustir::QuadStore quads = trustir::project_named_graphs(corpus);
  std::size_t links = 0;
  for (const auto& [url, targets] : graph.out) links += targets.size();
  std::cout << "pages: " << corpus.size() << "\n"
            << "links: " << links << "\n"
            << "quads: " << quads.size() << "\n";
  return 0;
}

int run_index(const Options& opts) {
  trustir::CorpusStore corpus = trustir::ingest_corpus(opts.corpus);
  trustir::InvertedIndex index = trustir::build_index(corpus);
  std::size_t postings = 0;
  for (const auto& [term, row] : index.postings) postings += row.size();
  std::cout << "documents: " << index.doc_lengths.size() << "\n"
            << "terms: " << index.postings.size() << "\n"
            << "postings: " << postings << "\n";
  return 0;
}

int run_query(const Options& opts, const std::vector<std::string>& words, bool explain) {
  std::string query;
  for (const std::string& word : words) {
    if (!query.empty()) query += ' ';
    query += word;
  }
  trustir::QueryOutput output = trustir::run_query(to_run_config(opts), query);
  std::cout << trustir::format_results(output.results);
  if (explain) {
    std::cout << "\n" << trustir::format_table(output.results);
    std::cerr << "candidates=" << output.stats.candidates
              << " trust_steps=" << output.stats.trust_steps
              << " cache_hits=" << output.stats.cache_hits
              << " dropped_by_trust=" << output.stats.filtered_by_trust
              << " dropped_by_policy=" << output.stats.filtered_by_policy << "\n";
  }
  return 0;
}

int run_trust(const Options& opts, const std::string& url) {
  trustir::CorpusStore corpus = trustir::ingest_corpus(opts.corpus);
  trustir::LinkGraph graph = trustir::build_link_graph(corpus);
  trustir::TrustCache cache(opts.ttl);
  if (std::filesystem::exists(opts.cache)) cache = trustir::TrustCache::load(opts.cache);
  cache.set_ttl_seconds(opts.ttl);

  trustir::TrustConfig cfg;
  long long now = now_or_clock(opts.now);
  std::vector<std::string> unseen;
  for (const std::string& target : corpus.at(url).outlinks) {
    if (cache.find(target) == nullptr) unseen.push_back(target);
  }
  trustir::TrustScore score = trustir::compute_trust(url, corpus, graph, cache, cfg, now);
  std::size_t seeded = 0;
  for (const std::string& target : unseen) {
    const trustir::TrustCacheEntry* entry = cache.find(target);
    if (entry != nullptr && entry->flag == 1) ++seeded;
  }
  cache.save(opts.cache);

  using trustir::format_double;
  std::cout << "url:           " << url << "\n";
  if (score.from_cache) {
    std::cout << "omega:         " << format_double(score.omega) << " (cached)\n";
    return 0;
  }
  std::cout << "f1 authority:  " << format_double(score.f1_authority) << "\n"
            << "f2 age:        " << format_double(score.f2_age) << "\n"
            << "f3 popularity: " << format_double(score.f3_popularity) << "\n"
            << "fact score:    " << format_double(score.fact_score) << "\n"
            << "prov seed:     " << format_double(score.prov) << "\n"
            << "iterations:    " << score.iterations << "\n"
            << "omega:         " << format_double(score.omega) << "\n";
  std::cout << "trajectory:    ";
  for (std::size_t i = 0; i < score.trajectory.size(); ++i) {
    if (i > 0) std::cout << " -> ";
    std::cout << format_double(score.trajectory[i]);
  }
  std::cout << "\nseeded:        " << seeded << " related urls\n";
  return 0;
}

int run_cache_list(const Options& opts) {
  trustir::TrustCache cache = trustir::TrustCache::load(opts.cache);
  for (const auto& [url, entry] : cache.entries()) {
    std::cout << url << '\t' << trustir::format_double_17(entry.trust) << '\t' << entry.stored_at
              << '\t' << entry.flag << "\n";
  }
  return 0;
}

int run_cache_flush(const Options& opts) {
  trustir::TrustCache cache = trustir::TrustCache::load(opts.cache);
  std::size_t removed = cache.flush_stale(now_or_clock(opts.now), opts.ttl);
  cache.save(opts.cache);
  std::cout << "removed: " << removed << "\n";
  return 0;
}

int run_policy_check(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open policy file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  trustir::PolicyAst ast = trustir::parse_policy(buffer.str());
  std::vector<trustir::ValidationIssue> issues =
      trustir::validate_policy(ast, trustir::default_known_dimensions());
  if (!issues.empty()) {
    for (const trustir::ValidationIssue& issue : issues) {
      std::cerr << path << ":" << issue.pos.line << ":" << issue.pos.column << ": "
                << issue.message << "\n";
    }
    return 2;
  }
  std::cout << "ok: policy '" << ast.name << "', " << ast.indicators.size() << " indicators, "
            << ast.filters.size() << " filters\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"offline search re-ranking by content trust and quality policies"};
  app.require_subcommand(1);

  // --config is resolved before regular parsing so flags can override it.
  Options opts;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    try {
      if (arg == "--config" && i + 1 < argc) apply_config_file(argv[i + 1], &opts);
      else if (arg.rfind("--config=", 0) == 0) apply_config_file(arg.substr(9), &opts);
    } catch (const CLI::ParseError& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
  }
  std::string config_path;

  auto* ingest = app.add_subcommand("ingest", "load a corpus and report its shape");
  ingest->add_option("--corpus", opts.corpus, "corpus file");
  ingest->add_option("--config", config_path, "config file (same keys as flags)");

  auto* index = app.add_subcommand("index", "build the inverted index and report stats");
  index->add_option("--corpus", opts.corpus, "corpus file");
  index->add_option("--config", config_path, "config file (same keys as flags)");

  auto* query = app.add_subcommand("query", "run the full ranking pipeline");
  add_common(query, &opts);
  query->add_option("--policy", opts.policy, "quality policy file (.pol)");
  query->add_option("--k", opts.k, "max candidate count")->check(CLI::PositiveNumber);
  query->add_option("--min-trust", opts.min_trust, "drop candidates with omega below this");
  query->add_flag("--baseline", opts.baseline, "raw search order; skip trust and quality");
  bool explain = false;
  query->add_flag("--explain", explain, "append a readable table and stage stats");
  query->add_option("--config", config_path, "config file (same keys as flags)");
  std::vector<std::string> query_words;
  query->add_option("text", query_words, "query text")->required()->expected(-1);

  auto* trust = app.add_subcommand("trust", "compute and explain one url's trust");
  add_common(trust, &opts);
  trust->add_option("--config", config_path, "config file (same keys as flags)");
  std::string trust_url;
  trust->add_option("url", trust_url, "url to evaluate")->required();

  auto* cache_cmd = app.add_subcommand("cache", "inspect or trim the trust cache");
  cache_cmd->require_subcommand(1);
  auto* cache_list = cache_cmd->add_subcommand("list", "print all entries");
  cache_list->add_option("--cache", opts.cache, "trust cache file");
  auto* cache_flush = cache_cmd->add_subcommand("flush", "drop stale converged entries");
  cache_flush->add_option("--cache", opts.cache, "trust cache file");
  cache_flush->add_option("--ttl", opts.ttl, "staleness threshold, seconds")
      ->check(CLI::PositiveNumber);
  cache_flush->add_option("--now", opts.now, "fixed evaluation time, epoch seconds");

  auto* policy_cmd = app.add_subcommand("policy", "work with quality policies");
  policy_cmd->require_subcommand(1);
  auto* policy_check = policy_cmd->add_subcommand("check", "parse and validate a policy file");
  std::string policy_file;
  policy_check->add_option("file", policy_file, "policy file (.pol)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  bool need_corpus = *ingest || *index || *query || *trust;
  bool need_cache = *query || *trust || *cache_list || *cache_flush;
  if (int rc = require_paths(opts, need_corpus, need_cache); rc != 0) return rc;

  try {
    if (*ingest) return run_ingest(opts);
    if (*index) return run_index(opts);
    if (*query) return run_query(opts, query_words, explain);
    if (*trust) return run_trust(opts, trust_url);
    if (*cache_list) return run_cache_list(opts);
    if (*cache_flush) return run_cache_flush(opts);
    if (*policy_check) return run_policy_check(policy_file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
