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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trustir/dates.hpp"
#include "trustir/link_graph.hpp"
#include "trustir/trust_cache.hpp"
#include "trustir/trust_config.hpp"

namespace trustir {

/// Result of one trust computation for a url.
///
/// omega is the website trustworthiness: the fixed point of
///   s = f1 + f2 + f3
///   f = log10(ln(s) + omega)        (s >= 1)
///   f = log10(-ln(s) + omega)       (s < 1)
///   omega' = e^f + e^(f/2)
/// iterated from a provenance-derived seed until |omega - omega'| <= tol.
/// Note omega lives on an exponential scale (roughly 2.3-3.7 for typical
/// inputs) while seeds live in [0, 1].
struct TrustScore {
  double omega = 0.0;
  double fact_confidence = 0.0;  // f from the last update
  double fact_score = 0.0;       // f1 + f2 + f3
  double f1_authority = 0.0;
  double f2_age = 0.0;
  double f3_popularity = 0.0;
  double prov = 0.0;  // provenance seed component, in [prov_floor, 1]
  int iterations = 0;
  bool converged = false;
  bool from_cache = false;
  std::vector<double> trajectory;  // seed followed by each update's omega
};

/// Longest-suffix lookup of a (lowercase) tld token in the authority table:
/// "gov.in" is tried before "in". Misses fall back to cfg.default_authority.
double authority_weight(const std::string& tld, const TrustConfig& cfg);

/// 2^(-age_days / half_life_days) for dated pages, cfg.missing_age_weight
/// otherwise. Throws Error("future date") when last_modified > now.
double age_weight(const std::optional<Date>& last_modified, Date now, const TrustConfig& cfg);

/// Log-scaled count of inlink sources that qualify as trustworthy, either by
/// cached trust (any flag, any age) or by authority weight:
/// min(1, log2(1+n) / log2(1+inlink_cap)).
double popularity_weight(const std::string& url, const LinkGraph& graph,
                         const CorpusStore& corpus, const TrustCache& cache,
                         const TrustConfig& cfg);

/// Seed omega for the iteration: prov = max(prov_floor, publisher
/// reputation), plus the cached trust when a provisional (flag-1) seed
/// exists for the url. Fresh flag-0 entries never reach here; they
/// short-circuit in compute_trust.
double initial_trust(const std::string& url, const TrustCache& cache, const CorpusStore& corpus,
                     const TrustConfig& cfg);

struct StepResult {
  double fact_score = 0.0;       // s as used by the update (after clamps)
  double fact_confidence = 0.0;  // f
  double omega_next = 0.0;
};

/// One update of the recurrence above. s is clamped below by 1e-6 (and up to
/// 1 when cfg.clamp_s_min1). Throws TrustError when the log argument is not
/// positive; unreachable while omega > 0, but guarded anyway.
StepResult trust_step(double f1, double f2, double f3, double omega, const TrustConfig& cfg);

struct OmegaSolve {
  double omega = 0.0;
  double fact_confidence = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trajectory;
};

/// Iterates trust_step from omega0 until |delta| <= cfg.tol or
/// cfg.max_iterations. Does not throw on non-convergence; inspect
/// `converged`.
OmegaSolve solve_omega(double f1, double f2, double f3, double omega0, const TrustConfig& cfg);

/// Full per-url trust computation:
///  - a fresh flag-0 cache entry short-circuits (from_cache=true, zero
///    iterations, no writes);
///  - otherwise the factor weights are computed once, omega is seeded from
///    provenance (plus any flag-1 seed) and iterated to convergence;
///  - converged values for static pages are stored with flag 0 and the
///    page's outlinks are seeded via propagate_related. Non-static pages are
///    never stored.
/// Throws TrustError ("trust iteration diverged", with trajectory) when the
/// iteration fails to converge, CorpusError when url is not in the corpus.
TrustScore compute_trust(const std::string& url, const CorpusStore& corpus,
                         const LinkGraph& graph, TrustCache& cache, const TrustConfig& cfg,
                         std::int64_t now);

/// Seeds each not-yet-cached outlink of `url` with a provisional entry
/// (trust = omega/5, flag 1). Runs only when omega reaches
/// cfg.propagation_min_omega or cfg.propagate_always is set. Existing
/// entries are left untouched; non-static corpus targets are rejected by the
/// cache. Returns the number of entries created.
std::size_t propagate_related(const std::string& url, double omega, const CorpusStore& corpus,
                              TrustCache& cache, const TrustConfig& cfg, std::int64_t now);

/// Sorts by omega descending (ties by url ascending), dropping urls whose
/// omega falls below cfg.min_trust_filter when that is set. Every url must
/// have a score.
std::vector<std::string> rank_by_trust(const std::vector<std::string>& urls,
                                       const std::map<std::string, TrustScore>& scores,
                                       const TrustConfig& cfg);

}  // namespace trustir
