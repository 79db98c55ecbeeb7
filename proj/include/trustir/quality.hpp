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
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "trustir/corpus.hpp"
#include "trustir/policy.hpp"
#include "trustir/quad_store.hpp"
#include "trustir/trust_config.hpp"

namespace trustir {

/// Per-url quality assessment. Each indicator's assessment score is the
/// weighted mean of its dimension scores; the decision value is the weighted
/// mean of the assessment scores. All values lie in [0, 1].
struct QualityScore {
  std::map<std::string, double> dims;
  std::map<IndicatorKind, double> metrics;
  double decision = 0.0;
};

/// Evaluates every REQUIRE of the policy against the page's named graph,
/// with ?page substituted by the url. A REQUIRE passes when at least one
/// pattern match satisfies its condition; a page with no matching quad fails
/// that REQUIRE. The page passes when every REQUIRE does; no filters means
/// pass.
bool evaluate_filters(const std::string& url, const PolicyAst& ast, const QuadStore& store);

/// Words whose density marks content as subjective.
const std::set<std::string>& subjectivity_lexicon();

/// Scores all five quality dimensions for a page:
///   relevancy     - fraction of distinct query terms present in the content
///   objectivity   - 1 - min(1, 10 * subjective-token density)
///   timeliness    - age weight of the Last-Modified date
///   believability - mean of publisher reputation and authority weight
///   rating        - Laplace-smoothed mean rating, (sum + 1) / (count + 2)
std::map<std::string, double> dimension_scores(const PageRecord& page,
                                               const std::vector<std::string>& query_terms,
                                               const TrustConfig& cfg, Date now);

/// Combines dimension scores through the policy's scoring functions (one
/// weighted mean per indicator) and decision function (weighted mean over
/// indicators). Weights need not be pre-normalized; an indicator whose
/// dimension weights sum to zero scores 0.
QualityScore assess(const std::map<std::string, double>& dims, const PolicyAst& ast);

struct RankedResult {
  int rank = 0;  // 1-based, contiguous
  std::string url;
  std::optional<double> omega;
  std::optional<double> decision;
  std::map<IndicatorKind, double> metrics;
};

/// Final ordering: drops urls outside `filter_passed`, then sorts by
/// decision descending, ties by omega descending, then url ascending.
std::vector<RankedResult> rank_by_quality(const std::vector<std::string>& trust_ordered,
                                          const std::map<std::string, QualityScore>& scores,
                                          const std::map<std::string, double>& omegas,
                                          const std::unordered_set<std::string>& filter_passed);

}  // namespace trustir
