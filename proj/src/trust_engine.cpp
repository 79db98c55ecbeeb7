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

#include "trustir/trust_engine.hpp"

#include <algorithm>
#include <cmath>

#include "trustir/errors.hpp"

namespace trustir {

double authority_weight(const std::string& tld, const TrustConfig& cfg) {
  // Try the full suffix first, then progressively shorter label-aligned
  // suffixes: "gov.in" falls back to "in" before the default applies.
  std::size_t start = 0;
  while (true) {
    auto it = cfg.authority_table.find(tld.substr(start));
    if (it != cfg.authority_table.end()) return it->second;
    std::size_t dot = tld.find('.', start);
    if (dot == std::string::npos) return cfg.default_authority;
    start = dot + 1;
  }
}

double age_weight(const std::optional<Date>& last_modified, Date now, const TrustConfig& cfg) {
  if (!last_modified) return cfg.missing_age_weight;
  std::int64_t age_days = days_between(*last_modified, now);
  if (age_days < 0) throw Error("future date");
  return std::exp2(-static_cast<double>(age_days) / cfg.half_life_days);
}

double popularity_weight(const std::string& url, const LinkGraph& graph,
                         const CorpusStore& corpus, const TrustCache& cache,
                         const TrustConfig& cfg) {
  int trusted = 0;
  for (const std::string& source : inlinks(graph, url)) {
    const TrustCacheEntry* entry = cache.find(source);
    if (entry != nullptr && entry->trust >= cfg.trusted_source_min_cached_trust) {
      ++trusted;
      continue;
    }
    const PageRecord* page = corpus.find(source);
    if (page != nullptr && authority_weight(page->tld, cfg) >= cfg.trusted_source_min_authority) {
      ++trusted;
    }
  }
  double scaled = std::log2(1.0 + trusted) / std::log2(1.0 + cfg.inlink_cap);
  return std::min(1.0, scaled);
}

double initial_trust(const std::string& url, const TrustCache& cache, const CorpusStore& corpus,
                     const TrustConfig& cfg) {
  const PageRecord& page = corpus.at(url);
  double prov = std::max(cfg.prov_floor, page.publisher_reputation);
  const TrustCacheEntry* entry = cache.find(url);
  if (entry != nullptr && entry->flag == 1) return entry->trust + prov;
  return prov;
}

StepResult trust_step(double f1, double f2, double f3, double omega, const TrustConfig& cfg) {
  double s = f1 + f2 + f3;
  if (cfg.clamp_s_min1) s = std::max(1.0, s);
  s = std::max(s, 1e-6);
  double c = (s < 1.0) ? -std::log(s) : std::log(s);
  double argument = c + omega;
  if (argument <= 0.0) throw TrustError("confidence argument non-positive", {omega});
  double f = std::log10(argument);
  return StepResult{s, f, std::exp(f) + std::exp(f / 2.0)};
}

OmegaSolve solve_omega(double f1, double f2, double f3, double omega0, const TrustConfig& cfg) {
  OmegaSolve solve;
  solve.trajectory.push_back(omega0);
  double omega = omega0;
  for (int i = 0; i < cfg.max_iterations; ++i) {
    StepResult step = trust_step(f1, f2, f3, omega, cfg);
    ++solve.iterations;
    solve.fact_confidence = step.fact_confidence;
    solve.trajectory.push_back(step.omega_next);
    double diff = std::fabs(omega - step.omega_next);
    omega = step.omega_next;
    if (diff <= cfg.tol) {
      solve.converged = true;
      break;
    }
  }
  solve.omega = omega;
  return solve;
}

TrustScore compute_trust(const std::string& url, const CorpusStore& corpus,
                         const LinkGraph& graph, TrustCache& cache, const TrustConfig& cfg,
                         std::int64_t now) {
  const PageRecord& page = corpus.at(url);

  if (auto hit = cache.get_fresh(url, now, cache.ttl_seconds()); hit && hit->second == 0) {
    TrustScore score;
    score.omega = hit->first;
    score.converged = true;
    score.from_cache = true;
    return score;
  }

  TrustScore score;
  score.f1_authority = authority_weight(page.tld, cfg);
  score.f2_age = age_weight(page.last_modified, Date::from_epoch_seconds(now), cfg);
  score.f3_popularity = popularity_weight(url, graph, corpus, cache, cfg);
  score.fact_score = score.f1_authority + score.f2_age + score.f3_popularity;
  score.prov = std::max(cfg.prov_floor, page.publisher_reputation);

  double seed = initial_trust(url, cache, corpus, cfg);
  OmegaSolve solve =
      solve_omega(score.f1_authority, score.f2_age, score.f3_popularity, seed, cfg);
  if (!solve.converged) {
    throw TrustError("trust iteration diverged for '" + url + "'", solve.trajectory);
  }
  score.omega = solve.omega;
  score.fact_confidence = solve.fact_confidence;
  score.iterations = solve.iterations;
  score.converged = true;
  score.trajectory = std::move(solve.trajectory);

  if (page.is_static) {
    cache.put(url, score.omega, now, 0, true);
    propagate_related(url, score.omega, corpus, cache, cfg, now);
  }
  return score;
}

std::size_t propagate_related(const std::string& url, double omega, const CorpusStore& corpus,
                              TrustCache& cache, const TrustConfig& cfg, std::int64_t now) {
  if (!cfg.propagate_always && omega < cfg.propagation_min_omega) return 0;

  std::size_t seeded = 0;
  for (const std::string& target : corpus.at(url).outlinks) {
    if (cache.find(target) != nullptr) continue;
    const PageRecord* page = corpus.find(target);
    bool target_static = page == nullptr || page->is_static;  // external targets are seedable
    if (cache.put(target, omega / 5.0, now, 1, target_static)) ++seeded;
  }
  return seeded;
}

std::vector<std::string> rank_by_trust(const std::vector<std::string>& urls,
                                       const std::map<std::string, TrustScore>& scores,
                                       const TrustConfig& cfg) {
  std::vector<std::string> ranked;
  ranked.reserve(urls.size());
  for (const std::string& url : urls) {
    double omega = scores.at(url).omega;
    if (cfg.min_trust_filter && omega < *cfg.min_trust_filter) continue;
    ranked.push_back(url);
  }
  std::sort(ranked.begin(), ranked.end(), [&](const std::string& a, const std::string& b) {
    double oa = scores.at(a).omega;
    double ob = scores.at(b).omega;
    if (oa != ob) return oa > ob;
    return a < b;
  });
  return ranked;
}

}  // namespace trustir
