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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "reference.hpp"
#include "testutil.hpp"
#include "trustir/quality.hpp"
#include "trustir/trust_engine.hpp"

namespace {

using testutil::make_page;
using namespace trustir;

const Date kToday = Date::parse("2010-01-15");
const std::vector<std::string> kAllDimensions = {"relevancy", "objectivity", "timeliness",
                                                 "believability", "rating"};

PolicyAst policy_with_filter(const std::string& filter_line) {
  return parse_policy("POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1 } " + filter_line +
                      " }");
}

TEST(EvaluateFilters, NoFiltersAlwaysPasses) {
  QuadStore store;
  PolicyAst ast = parse_policy("POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1 } }");
  EXPECT_TRUE(evaluate_filters("https://a.com/", ast, store));
}

TEST(EvaluateFilters, DateComparisonFailsOldPages) {
  PageRecord page = make_page("a.com", "com", "", "2005-03-01");
  QuadStore store = project_named_graphs(CorpusStore({page}));
  PolicyAst ast = policy_with_filter(
      R"(REQUIRE (?page ?s meta:last_modified ?d) WHERE ?d >= "2009-01-01")");
  EXPECT_FALSE(evaluate_filters(page.url, ast, store));
}

TEST(EvaluateFilters, MissingEvidenceFails) {
  PageRecord page = make_page("a.com", "com");  // no last_modified
  QuadStore store = project_named_graphs(CorpusStore({page}));
  PolicyAst ast = policy_with_filter(
      R"(REQUIRE (?page ?s meta:last_modified ?d) WHERE ?d >= "2009-01-01")");
  EXPECT_FALSE(evaluate_filters(page.url, ast, store));
}

TEST(EvaluateFilters, SatisfiedRequirePasses) {
  PageRecord page = make_page("a.com", "com", "", "2009-06-15");
  QuadStore store = project_named_graphs(CorpusStore({page}));
  PolicyAst ast = policy_with_filter(
      R"(REQUIRE (?page ?s meta:last_modified ?d) WHERE ?d >= "2009-01-01")");
  EXPECT_TRUE(evaluate_filters(page.url, ast, store));
}

TEST(EvaluateFilters, AllRequiresMustPass) {
  PageRecord page = make_page("a.com", "com", "", "2009-06-15");
  QuadStore store = project_named_graphs(CorpusStore({page}));
  PolicyAst ast = parse_policy(
      "POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1 } "
      R"(REQUIRE (?page ?s meta:last_modified ?d) WHERE ?d >= "2009-01-01" )"
      R"(REQUIRE (?page ?s meta:domain ?h) WHERE ?h = "other.com" })");
  EXPECT_FALSE(evaluate_filters(page.url, ast, store));
}

TEST(EvaluateFilters, PageVariableConditionComparesTheUrl) {
  PageRecord page = make_page("a.com", "com");
  QuadStore store = project_named_graphs(CorpusStore({page}));
  PolicyAst ast = policy_with_filter(
      R"(REQUIRE (?page ?page meta:domain ?h) WHERE ?page = "https://a.com/")");
  EXPECT_TRUE(evaluate_filters(page.url, ast, store));
}

TEST(EvaluateFilters, NumericComparisonOnReputation) {
  PageRecord page = make_page("a.com", "com");
  page.publisher_reputation = 0.75;
  QuadStore store = project_named_graphs(CorpusStore({page}));
  PolicyAst ast =
      policy_with_filter(R"(REQUIRE (?page ?s prov:reputation ?r) WHERE ?r >= 0.5)");
  EXPECT_TRUE(evaluate_filters(page.url, ast, store));
  PolicyAst strict =
      policy_with_filter(R"(REQUIRE (?page ?s prov:reputation ?r) WHERE ?r >= 0.9)");
  EXPECT_FALSE(evaluate_filters(page.url, strict, store));
}

TEST(DimensionScores, RatingUsesLaplaceSmoothing) {
  TrustConfig cfg;
  PageRecord page = make_page("a.com", "com");
  EXPECT_DOUBLE_EQ(dimension_scores(page, {"x"}, cfg, kToday).at("rating"), 0.5);
  page.ratings = {{"r1", 1.0}, {"r2", 1.0}};
  EXPECT_DOUBLE_EQ(dimension_scores(page, {"x"}, cfg, kToday).at("rating"), 0.75);
}

TEST(DimensionScores, RelevancyIsTheMatchedFraction) {
  TrustConfig cfg;
  PageRecord page = make_page("a.com", "com", "study visa options");
  EXPECT_DOUBLE_EQ(dimension_scores(page, {"study", "visa"}, cfg, kToday).at("relevancy"), 1.0);
  EXPECT_DOUBLE_EQ(dimension_scores(page, {"trip", "fees"}, cfg, kToday).at("relevancy"), 0.0);
  EXPECT_DOUBLE_EQ(dimension_scores(page, {"study", "fees"}, cfg, kToday).at("relevancy"), 0.5);
}

TEST(DimensionScores, ObjectivityPenalizesSubjectiveTokens) {
  TrustConfig cfg;
  PageRecord neutral = make_page("a.com", "com", "visa rules published by the office");
  EXPECT_DOUBLE_EQ(dimension_scores(neutral, {"x"}, cfg, kToday).at("objectivity"), 1.0);

  // 2 lexicon tokens out of 10 -> 1 - min(1, 10*0.2) = 0
  PageRecord gushing =
      make_page("b.com", "com", "i think padding words go here here here here best");
  EXPECT_DOUBLE_EQ(dimension_scores(gushing, {"x"}, cfg, kToday).at("objectivity"), 0.0);

  // 1 lexicon token out of 20 -> 1 - 0.5
  PageRecord mild = make_page(
      "c.com", "com",
      "best one two three four five six seven eight nine ten eleven twelve thirteen fourteen "
      "fifteen sixteen seventeen eighteen nineteen");
  EXPECT_DOUBLE_EQ(dimension_scores(mild, {"x"}, cfg, kToday).at("objectivity"), 0.5);
}

TEST(DimensionScores, BelievabilityMixesReputationAndAuthority) {
  TrustConfig cfg;
  PageRecord page = make_page("a.gov", "gov");
  page.publisher_reputation = 0.8;
  EXPECT_DOUBLE_EQ(dimension_scores(page, {"x"}, cfg, kToday).at("believability"), 0.9);
}

TEST(DimensionScores, TimelinessIsTheAgeWeight) {
  TrustConfig cfg;
  PageRecord page = make_page("a.com", "com", "", "2009-01-15");
  EXPECT_DOUBLE_EQ(dimension_scores(page, {"x"}, cfg, kToday).at("timeliness"),
                   age_weight(page.last_modified, kToday, cfg));
}

std::map<std::string, double> three_dims(double content, double context, double rating) {
  return {{"relevancy", content}, {"timeliness", context}, {"rating", rating}};
}

PolicyAst three_single_dim_indicators(double w1, double w2, double w3) {
  PolicyAst ast;
  ast.name = "p";
  ast.indicators.push_back({IndicatorKind::kContent, w1, {{"relevancy", 1.0, {}}}, {}});
  ast.indicators.push_back({IndicatorKind::kContext, w2, {{"timeliness", 1.0, {}}}, {}});
  ast.indicators.push_back({IndicatorKind::kRating, w3, {{"rating", 1.0, {}}}, {}});
  return ast;
}

TEST(Assess, EqualWeightsTakeTheMean) {
  QualityScore score = assess(three_dims(0.2, 0.4, 0.6), three_single_dim_indicators(1, 1, 1));
  EXPECT_DOUBLE_EQ(score.decision, 0.4);
}

TEST(Assess, WeightedMean) {
  QualityScore score = assess(three_dims(1.0, 0.0, 0.0), three_single_dim_indicators(2, 1, 1));
  EXPECT_DOUBLE_EQ(score.decision, 0.5);
}

TEST(Assess, SingleDimensionPassesThrough) {
  PolicyAst ast;
  ast.name = "p";
  ast.indicators.push_back({IndicatorKind::kContent, 1.0, {{"relevancy", 1.0, {}}}, {}});
  QualityScore score = assess({{"relevancy", 0.7}}, ast);
  EXPECT_DOUBLE_EQ(score.decision, 0.7);
  EXPECT_DOUBLE_EQ(score.metrics.at(IndicatorKind::kContent), 0.7);
}

TEST(Assess, MatchesBruteForceOnRandomInputs) {
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    PolicyAst ast = testref::random_policy(rng);
    std::map<std::string, double> dims;
    for (const std::string& name : kAllDimensions) dims[name] = unit(rng);
    EXPECT_NEAR(assess(dims, ast).decision, testref::naive_decision(dims, ast), 1e-12);
  }
}

TEST(Assess, RaisingAnyDimensionNeverLowersTheDecision) {
  std::mt19937 rng(56);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    PolicyAst ast = testref::random_policy(rng);
    std::map<std::string, double> dims;
    for (const std::string& name : kAllDimensions) dims[name] = unit(rng);
    double base = assess(dims, ast).decision;
    auto it = dims.begin();
    std::advance(it, static_cast<long>(rng() % dims.size()));
    it->second = std::min(1.0, it->second + unit(rng) * (1.0 - it->second));
    EXPECT_GE(assess(dims, ast).decision, base - 1e-12);
  }
}

TEST(Assess, AllValuesStayInUnitRange) {
  std::mt19937 rng(57);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    PolicyAst ast = testref::random_policy(rng);
    std::map<std::string, double> dims;
    for (const std::string& name : kAllDimensions) dims[name] = unit(rng);
    QualityScore score = assess(dims, ast);
    EXPECT_GE(score.decision, 0.0);
    EXPECT_LE(score.decision, 1.0);
    for (const auto& [kind, value] : score.metrics) {
      EXPECT_GE(value, 0.0);
      EXPECT_LE(value, 1.0);
    }
  }
}

TEST(RankByQuality, SortsByDecisionThenOmegaThenUrl) {
  std::map<std::string, QualityScore> scores;
  scores["https://a.net/"].decision = 0.9;
  scores["https://b.net/"].decision = 0.5;
  scores["https://c.net/"].decision = 0.5;
  scores["https://d.net/"].decision = 0.5;
  std::map<std::string, double> omegas = {{"https://a.net/", 2.0},
                                          {"https://b.net/", 3.1},
                                          {"https://c.net/", 2.8},
                                          {"https://d.net/", 2.8}};
  std::vector<std::string> order = {"https://d.net/", "https://c.net/", "https://b.net/",
                                    "https://a.net/"};
  std::unordered_set<std::string> passed(order.begin(), order.end());

  std::vector<RankedResult> results = rank_by_quality(order, scores, omegas, passed);
  ASSERT_EQ(results.size(), 4u);
  EXPECT_EQ(results[0].url, "https://a.net/");
  EXPECT_EQ(results[1].url, "https://b.net/");
  EXPECT_EQ(results[2].url, "https://c.net/");
  EXPECT_EQ(results[3].url, "https://d.net/");
  for (std::size_t i = 0; i < results.size(); ++i) {
    EXPECT_EQ(results[i].rank, static_cast<int>(i) + 1);
  }
}

TEST(RankByQuality, FilterFailuresAreDropped) {
  std::map<std::string, QualityScore> scores;
  scores["https://a.net/"].decision = 0.9;
  scores["https://b.net/"].decision = 0.8;
  std::map<std::string, double> omegas = {{"https://a.net/", 2.0}, {"https://b.net/", 3.0}};
  std::vector<RankedResult> results = rank_by_quality(
      {"https://a.net/", "https://b.net/"}, scores, omegas, {"https://b.net/"});
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].url, "https://b.net/");
  EXPECT_EQ(results[0].rank, 1);
}

}  // namespace
