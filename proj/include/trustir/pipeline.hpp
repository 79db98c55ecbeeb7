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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "trustir/corpus.hpp"
#include "trustir/link_graph.hpp"
#include "trustir/policy.hpp"
#include "trustir/quad_store.hpp"
#include "trustir/quality.hpp"
#include "trustir/search_index.hpp"
#include "trustir/trust_cache.hpp"
#include "trustir/trust_config.hpp"

namespace trustir {

struct RunConfig {
  std::filesystem::path corpus_path;
  std::filesystem::path cache_path;
  std::optional<std::filesystem::path> policy_path;  // built-in balanced policy when unset
  std::int64_t ttl_seconds = 86400;
  TrustConfig trust;
  std::size_t k = 10;
  bool baseline = false;                    // raw search order, no trust/quality, no cache use
  std::optional<std::int64_t> now_epoch;    // wall clock when unset
};

struct QueryStats {
  std::size_t candidates = 0;
  std::size_t trust_steps = 0;  // total fixed-point updates across candidates
  std::size_t cache_hits = 0;
  std::size_t filtered_by_trust = 0;
  std::size_t filtered_by_policy = 0;
};

struct QueryOutput {
  std::vector<RankedResult> results;
  QueryStats stats;
};

/// The full query pipeline over one corpus: search for candidates, compute
/// per-url trust, order and filter by trust, assess quality under the
/// policy, and rank. Construction loads and validates every input; errors
/// from any stage are re-thrown with the stage name prefixed.
class Pipeline {
 public:
  explicit Pipeline(RunConfig cfg);

  /// Runs one query. Non-baseline runs read and update the in-memory cache;
  /// call save_cache() to persist. Baseline runs return the raw search order
  /// with omega/decision unset and leave the cache untouched.
  QueryOutput run(const std::string& query);

  /// Persists the cache file (atomic replace). No-op in baseline mode.
  void save_cache() const;

  const CorpusStore& corpus() const noexcept { return corpus_; }
  const LinkGraph& graph() const noexcept { return graph_; }
  const QuadStore& quads() const noexcept { return quads_; }
  const InvertedIndex& index() const noexcept { return index_; }
  const PolicyAst& policy() const noexcept { return policy_; }
  TrustCache& cache() noexcept { return cache_; }
  std::int64_t now() const noexcept { return now_; }

 private:
  RunConfig cfg_;
  CorpusStore corpus_;
  LinkGraph graph_;
  QuadStore quads_;
  InvertedIndex index_;
  PolicyAst policy_;
  TrustCache cache_;
  std::int64_t now_;
};

/// Convenience wrapper: build a Pipeline, run one query, persist the cache.
QueryOutput run_query(const RunConfig& cfg, const std::string& query);

/// One JSON object per line with fields rank, url and, for non-baseline
/// results, omega, decision and the per-indicator scores (content, context,
/// rating). Deterministic for identical inputs.
std::string format_results(const std::vector<RankedResult>& results);

/// Human-readable table of the same records.
std::string format_table(const std::vector<RankedResult>& results);

}  // namespace trustir
