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

#include <map>
#include <optional>
#include <string>

namespace trustir {

inline std::map<std::string, double> default_authority_table() {
  return {{"gov", 1.0}, {"edu", 1.0}, {"org", 0.6}, {"com", 0.4}, {"net", 0.4}};
}

/// Tunables for the content-trust computation. Everything that turns prose
/// ("authoritative domains", "recently modified", "trusted sources") into a
/// number lives here so experiments can vary it.
struct TrustConfig {
  // Fixed-point iteration.
  double tol = 0.05;
  int max_iterations = 100;

  // Authority: longest-suffix lookup over the table, miss -> default.
  std::map<std::string, double> authority_table = default_authority_table();
  double default_authority = 0.2;

  // Age: weight = 2^(-age_days / half_life_days); pages without a
  // Last-Modified date get missing_age_weight.
  double half_life_days = 365.0;
  double missing_age_weight = 0.25;

  // Popularity: log-scaled inlink count, saturating at inlink_cap trusted
  // sources. A source counts as trusted when its cached trust reaches
  // trusted_source_min_cached_trust or its authority weight reaches
  // trusted_source_min_authority.
  int inlink_cap = 32;
  double trusted_source_min_authority = 0.8;
  double trusted_source_min_cached_trust = 1.0;

  // Related-link propagation: seed outlinks only from pages whose converged
  // omega reaches propagation_min_omega, unless propagate_always is set.
  double propagation_min_omega = 3.0;
  bool propagate_always = false;

  // Fact-score handling. clamp_s_min1 lifts s to at least 1, which
  // neutralizes the branch where low fact scores raise trust.
  bool clamp_s_min1 = false;

  // Floor for the provenance seed; keeps the log argument positive.
  double prov_floor = 0.05;

  // When set, rank_by_trust drops urls whose omega falls below it.
  std::optional<double> min_trust_filter;
};

}  // namespace trustir
