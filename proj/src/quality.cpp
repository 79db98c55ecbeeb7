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

#include "trustir/quality.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>

#include "trustir/errors.hpp"
#include "trustir/text.hpp"
#include "trustir/trust_engine.hpp"

namespace trustir {

namespace {

bool parse_number(const std::string& text, double* value) {
  if (text.empty()) return false;
  errno = 0;
  char* end = nullptr;
  *value = std::strtod(text.c_str(), &end);
  return errno == 0 && end == text.c_str() + text.size();
}

// Numbers compare numerically when both sides parse; everything else falls
// back to byte order, which matches chronological order for ISO dates.
bool compare(const std::string& lhs, CompareOp op, const std::string& rhs) {
  double a = 0.0, b = 0.0;
  int cmp;
  if (parse_number(lhs, &a) && parse_number(rhs, &b)) {
    cmp = a < b ? -1 : (a > b ? 1 : 0);
  } else {
    cmp = lhs.compare(rhs);
    cmp = cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
  }
  switch (op) {
    case CompareOp::kEq: return cmp == 0;
    case CompareOp::kNe: return cmp != 0;
    case CompareOp::kLt: return cmp < 0;
    case CompareOp::kLe: return cmp <= 0;
    case CompareOp::kGt: return cmp > 0;
    case CompareOp::kGe: return cmp >= 0;
  }
  return false;
}

}  // namespace

bool evaluate_filters(const std::string& url, const PolicyAst& ast, const QuadStore& store) {
  for (const PolicyFilter& filter : ast.filters) {
    QuadPattern pattern;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      pattern[i] = filter.pattern[i] == "?page" ? url : filter.pattern[i];
    }
    bool satisfied = false;
    for (const Binding& binding : match_pattern(store, pattern)) {
      const std::string& value =
          filter.variable == "?page" ? url : binding.at(filter.variable);
      if (compare(value, filter.op, filter.literal)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

const std::set<std::string>& subjectivity_lexicon() {
  static const std::set<std::string> lexicon = {
      "best",      "worst",        "amazing", "terrible", "awesome",
      "horrible",  "incredible",   "unbelievable", "i",   "we",
      "my",        "our",          "think",   "believe",  "feel"};
  return lexicon;
}

std::map<std::string, double> dimension_scores(const PageRecord& page,
                                               const std::vector<std::string>& query_terms,
                                               const TrustConfig& cfg, Date now) {
  std::vector<std::string> tokens = tokenize(page.content);
  std::set<std::string> doc_terms(tokens.begin(), tokens.end());
  std::set<std::string> distinct_query(query_terms.begin(), query_terms.end());

  std::map<std::string, double> dims;

  double matched = 0.0;
  for (const std::string& term : distinct_query) {
    if (doc_terms.count(term)) matched += 1.0;
  }
  dims["relevancy"] =
      distinct_query.empty() ? 0.0 : matched / static_cast<double>(distinct_query.size());

  std::size_t subjective = 0;
  for (const std::string& token : tokens) {
    if (subjectivity_lexicon().count(token)) ++subjective;
  }
  double density = static_cast<double>(subjective) /
                   static_cast<double>(std::max<std::size_t>(tokens.size(), 1));
  dims["objectivity"] = 1.0 - std::min(1.0, 10.0 * density);

  dims["timeliness"] = age_weight(page.last_modified, now, cfg);
  dims["believability"] =
      0.5 * page.publisher_reputation + 0.5 * authority_weight(page.tld, cfg);

  double rating_sum = 0.0;
  for (const Rating& rating : page.ratings) rating_sum += rating.score;
  dims["rating"] = (rating_sum + 1.0) / (static_cast<double>(page.ratings.size()) + 2.0);

  return dims;
}

QualityScore assess(const std::map<std::string, double>& dims, const PolicyAst& ast) {
  QualityScore score;
  score.dims = dims;

  double weight_sum = 0.0;
  double weighted = 0.0;
  for (const PolicyIndicator& indicator : ast.indicators) {
    double dim_weight_sum = 0.0;
    double dim_weighted = 0.0;
    for (const PolicyDimension& dim : indicator.dims) {
      auto it = dims.find(dim.name);
      if (it == dims.end()) throw Error("unknown dimension '" + dim.name + "'");
      dim_weight_sum += dim.weight;
      dim_weighted += dim.weight * it->second;
    }
    double assessment = dim_weight_sum > 0.0 ? dim_weighted / dim_weight_sum : 0.0;
    score.metrics[indicator.kind] = assessment;
    weight_sum += indicator.weight;
    weighted += indicator.weight * assessment;
  }
  if (weight_sum <= 0.0) throw Error("indicator weights sum to zero");
  score.decision = weighted / weight_sum;
  return score;
}

std::vector<RankedResult> rank_by_quality(const std::vector<std::string>& trust_ordered,
                                          const std::map<std::string, QualityScore>& scores,
                                          const std::map<std::string, double>& omegas,
                                          const std::unordered_set<std::string>& filter_passed) {
  std::vector<std::string> urls;
  for (const std::string& url : trust_ordered) {
    if (filter_passed.count(url)) urls.push_back(url);
  }
  std::sort(urls.begin(), urls.end(), [&](const std::string& a, const std::string& b) {
    double da = scores.at(a).decision;
    double db = scores.at(b).decision;
    if (da != db) return da > db;
    double oa = omegas.at(a);
    double ob = omegas.at(b);
    if (oa != ob) return oa > ob;
    return a < b;
  });

  std::vector<RankedResult> results;
  results.reserve(urls.size());
  for (std::size_t i = 0; i < urls.size(); ++i) {
    const QualityScore& quality = scores.at(urls[i]);
    RankedResult result;
    result.rank = static_cast<int>(i) + 1;
    result.url = urls[i];
    result.omega = omegas.at(urls[i]);
    result.decision = quality.decision;
    result.metrics = quality.metrics;
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace trustir
