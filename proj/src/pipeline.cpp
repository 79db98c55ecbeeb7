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

#include "trustir/pipeline.hpp"

#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "trustir/errors.hpp"
#include "trustir/text.hpp"
#include "trustir/trust_engine.hpp"

namespace trustir {

namespace {

[[noreturn]] void rethrow_tagged(const std::string& stage, const std::exception& e) {
  throw Error(stage + ": " + e.what());
}

PolicyAst load_policy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open policy file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  PolicyAst ast = parse_policy(buffer.str());
  std::vector<ValidationIssue> issues = validate_policy(ast, default_known_dimensions());
  if (!issues.empty()) {
    std::string message = "policy file '" + path.string() + "' invalid:";
    for (const ValidationIssue& issue : issues) {
      message += "\n  " + std::to_string(issue.pos.line) + ":" +
                 std::to_string(issue.pos.column) + ": " + issue.message;
    }
    throw Error(message);
  }
  return ast;
}

}  // namespace

Pipeline::Pipeline(RunConfig cfg) : cfg_(std::move(cfg)), cache_(cfg_.ttl_seconds) {
  if (cfg_.k < 1) throw Error("result count k must be at least 1");
  try {
    corpus_ = ingest_corpus(cfg_.corpus_path);
    if (corpus_.empty()) throw CorpusError("corpus is empty");
    graph_ = build_link_graph(corpus_);
    quads_ = project_named_graphs(corpus_);
    index_ = build_index(corpus_);
  } catch (const Error& e) {
    rethrow_tagged("corpus", e);
  }
  try {
    policy_ = cfg_.policy_path ? load_policy(*cfg_.policy_path) : default_policy();
  } catch (const Error& e) {
    rethrow_tagged("policy", e);
  }
  // Baseline mode never touches the cache file, not even to read it.
  if (!cfg_.baseline && std::filesystem::exists(cfg_.cache_path)) {
    try {
      cache_ = TrustCache::load(cfg_.cache_path);
    } catch (const Error& e) {
      rethrow_tagged("cache", e);
    }
  }
  cache_.set_ttl_seconds(cfg_.ttl_seconds);
  now_ = cfg_.now_epoch ? *cfg_.now_epoch : static_cast<std::int64_t>(std::time(nullptr));
}

QueryOutput Pipeline::run(const std::string& query) {
  QueryOutput output;

  std::vector<std::string> candidates;
  try {
    candidates = search(index_, query, cfg_.k);
  } catch (const Error& e) {
    rethrow_tagged("search", e);
  }
  output.stats.candidates = candidates.size();

  if (cfg_.baseline) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      RankedResult result;
      result.rank = static_cast<int>(i) + 1;
      result.url = candidates[i];
      output.results.push_back(std::move(result));
    }
    return output;
  }

  std::map<std::string, TrustScore> trust;
  std::map<std::string, double> omegas;
  try {
    for (const std::string& url : candidates) {
      TrustScore score = compute_trust(url, corpus_, graph_, cache_, cfg_.trust, now_);
      output.stats.trust_steps += static_cast<std::size_t>(score.iterations);
      if (score.from_cache) ++output.stats.cache_hits;
      omegas[url] = score.omega;
      trust.emplace(url, std::move(score));
    }
  } catch (const Error& e) {
    rethrow_tagged("trust", e);
  }

  std::vector<std::string> trust_ordered = rank_by_trust(candidates, trust, cfg_.trust);
  output.stats.filtered_by_trust = candidates.size() - trust_ordered.size();

  std::map<std::string, QualityScore> quality;
  std::unordered_set<std::string> passed;
  try {
    std::vector<std::string> query_terms = tokenize(query);
    Date today = Date::from_epoch_seconds(now_);
    for (const std::string& url : trust_ordered) {
      const PageRecord& page = corpus_.at(url);
      if (evaluate_filters(url, policy_, quads_)) passed.insert(url);
      quality.emplace(url, assess(dimension_scores(page, query_terms, cfg_.trust, today), policy_));
    }
  } catch (const Error& e) {
    rethrow_tagged("quality", e);
  }
  output.stats.filtered_by_policy = trust_ordered.size() - passed.size();

  output.results = rank_by_quality(trust_ordered, quality, omegas, passed);
  return output;
}

void Pipeline::save_cache() const {
  if (cfg_.baseline) return;
  try {
    cache_.save(cfg_.cache_path);
  } catch (const Error& e) {
    rethrow_tagged("cache", e);
  }
}

QueryOutput run_query(const RunConfig& cfg, const std::string& query) {
  Pipeline pipeline(cfg);
  QueryOutput output = pipeline.run(query);
  pipeline.save_cache();
  return output;
}

std::string format_results(const std::vector<RankedResult>& results) {
  std::string out;
  for (const RankedResult& result : results) {
    nlohmann::ordered_json record;
    record["rank"] = result.rank;
    record["url"] = result.url;
    if (result.omega) record["omega"] = *result.omega;
    if (result.decision) record["decision"] = *result.decision;
    for (const auto& [kind, value] : result.metrics) {
      record[to_lower(indicator_kind_name(kind))] = value;
    }
    out += record.dump();
    out += '\n';
  }
  return out;
}

std::string format_table(const std::vector<RankedResult>& results) {
  std::ostringstream out;
  out << "rank  omega     decision  content   context   rating    url\n";
  auto cell = [&](const std::optional<double>& value) {
    std::string text = value ? format_double(*value) : "-";
    if (text.size() > 8) text.resize(8);
    out << text << std::string(10 - text.size(), ' ');
  };
  for (const RankedResult& result : results) {
    std::string rank = std::to_string(result.rank);
    out << rank << std::string(6 - std::min<std::size_t>(rank.size(), 5), ' ');
    cell(result.omega);
    cell(result.decision);
    for (IndicatorKind kind :
         {IndicatorKind::kContent, IndicatorKind::kContext, IndicatorKind::kRating}) {
      auto it = result.metrics.find(kind);
      cell(it == result.metrics.end() ? std::optional<double>{} : std::optional<double>{it->second});
    }
    out << result.url << '\n';
  }
  return out.str();
}

}  // namespace trustir
