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

#include <algorithm>
#include <random>

#include "reference.hpp"
#include "trustir/errors.hpp"
#include "trustir/policy.hpp"

namespace {

using namespace trustir;

TEST(ParsePolicy, MinimalPolicy) {
  PolicyAst ast = parse_policy("POLICY p { CONTENT WEIGHT 1.0 { relevancy WEIGHT 1.0 } }");
  EXPECT_EQ(ast.name, "p");
  ASSERT_EQ(ast.indicators.size(), 1u);
  EXPECT_EQ(ast.indicators[0].kind, IndicatorKind::kContent);
  EXPECT_DOUBLE_EQ(ast.indicators[0].weight, 1.0);
  ASSERT_EQ(ast.indicators[0].dims.size(), 1u);
  EXPECT_EQ(ast.indicators[0].dims[0].name, "relevancy");
  EXPECT_TRUE(ast.filters.empty());
}

TEST(ParsePolicy, FullPolicyWithCommentsAndFilters) {
  const char* text = R"(# freshness-aware policy
POLICY fresh {
  CONTENT WEIGHT 2.0 {
    relevancy WEIGHT 1.0
    objectivity WEIGHT 0.5
  }
  RATING WEIGHT 1.0 { rating WEIGHT 1.0 }
  REQUIRE (?page ?s meta:last_modified ?d) WHERE ?d >= "2009-01-01"
  REQUIRE (?page ?s meta:domain ?host) WHERE ?host != "spam.example.com"
})";
  PolicyAst ast = parse_policy(text);
  EXPECT_EQ(ast.indicators.size(), 2u);
  ASSERT_EQ(ast.filters.size(), 2u);
  EXPECT_EQ(ast.filters[0].pattern[2], "meta:last_modified");
  EXPECT_EQ(ast.filters[0].variable, "?d");
  EXPECT_EQ(ast.filters[0].op, CompareOp::kGe);
  EXPECT_EQ(ast.filters[0].literal, "2009-01-01");
}

TEST(ParsePolicy, DuplicateIndicatorKindIsSemanticError) {
  const char* text =
      "POLICY p {\n"
      "  CONTENT WEIGHT 1.0 { relevancy WEIGHT 1.0 }\n"
      "  CONTENT WEIGHT 1.0 { objectivity WEIGHT 1.0 }\n"
      "}\n";
  try {
    parse_policy(text);
    FAIL() << "expected PolicyError";
  } catch (const PolicyError& e) {
    EXPECT_EQ(e.message(), "CONTENT declared twice");
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(ParsePolicy, DuplicateDimensionIsSemanticError) {
  const char* text =
      "POLICY p { CONTENT WEIGHT 1.0 { relevancy WEIGHT 1.0 relevancy WEIGHT 0.2 } }";
  try {
    parse_policy(text);
    FAIL() << "expected PolicyError";
  } catch (const PolicyError& e) {
    EXPECT_EQ(e.message(), "dimension relevancy declared twice");
  }
}

TEST(ParsePolicy, UnboundConditionVariableIsSemanticError) {
  const char* text =
      "POLICY p {\n"
      "  CONTENT WEIGHT 1.0 { relevancy WEIGHT 1.0 }\n"
      "  REQUIRE (?page ?s meta:domain ?d) WHERE ?x = \"a\"\n"
      "}\n";
  try {
    parse_policy(text);
    FAIL() << "expected PolicyError";
  } catch (const PolicyError& e) {
    EXPECT_EQ(e.message(), "condition variable ?x not bound by its pattern");
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 43);
  }
}

TEST(ParsePolicy, ZeroWeightSumIsSemanticError) {
  const char* text = "POLICY p { CONTENT WEIGHT 0.0 { relevancy WEIGHT 1.0 } }";
  try {
    parse_policy(text);
    FAIL() << "expected PolicyError";
  } catch (const PolicyError& e) {
    EXPECT_EQ(e.message(), "indicator weights sum to zero");
  }
}

TEST(ParsePolicy, SyntaxErrorsCarryPositionsInsideTheInput) {
  const std::vector<std::string> broken = {
      "",
      "POLICY",
      "POLICY p",
      "POLICY p { }",
      "POLICY p { CONTENT WEIGHT { relevancy WEIGHT 1 } }",
      "POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1 }",
      "POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1 } } trailing",
      "POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1.x } }",
      "POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1 } REQUIRE (?a ?b ?c) WHERE ?a = 1 }",
      "POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1 } REQUIRE (?a ?b ?c ?d) WHERE ?a @ 1 }",
      "POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT \"one\" } }",
  };
  for (const std::string& text : broken) {
    try {
      parse_policy(text);
      FAIL() << "expected PolicyError for: " << text;
    } catch (const PolicyError& e) {
      int lines = 1 + static_cast<int>(std::count(text.begin(), text.end(), '\n'));
      EXPECT_GE(e.line(), 1) << text;
      EXPECT_LE(e.line(), lines) << text;
      EXPECT_GE(e.column(), 1) << text;
      EXPECT_LE(e.column(), static_cast<int>(text.size()) + 2) << text;
    }
  }
}

TEST(ParsePolicy, StringEscapesRoundTrip) {
  PolicyAst ast = parse_policy(
      "POLICY p { CONTENT WEIGHT 1 { relevancy WEIGHT 1 } "
      "REQUIRE (?page ?s meta:domain ?d) WHERE ?d = \"a \\\"quoted\\\" \\\\ value\" }");
  EXPECT_EQ(ast.filters[0].literal, "a \"quoted\" \\ value");
  EXPECT_EQ(parse_policy(print_policy(ast)), ast);
}

TEST(ValidatePolicy, AcceptsKnownDimensions) {
  PolicyAst ast = parse_policy("POLICY p { CONTEXT WEIGHT 1 { timeliness WEIGHT 1 } }");
  EXPECT_TRUE(validate_policy(ast, default_known_dimensions()).empty());
}

TEST(ValidatePolicy, ReportsUnknownDimensionWithKind) {
  PolicyAst ast = parse_policy("POLICY p { CONTENT WEIGHT 1 { believability WEIGHT 1 } }");
  auto issues = validate_policy(ast, default_known_dimensions());
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].message, "believability not a CONTENT dimension");
}

TEST(ValidatePolicy, ReportsEveryUnknownName) {
  PolicyAst ast = parse_policy(
      "POLICY p { CONTENT WEIGHT 1 { accuracy WEIGHT 1 timeliness WEIGHT 1 } }");
  EXPECT_EQ(validate_policy(ast, default_known_dimensions()).size(), 2u);
}

TEST(ValidatePolicy, EmptyIndicatorReported) {
  PolicyAst ast;
  ast.name = "p";
  PolicyIndicator indicator;
  indicator.kind = IndicatorKind::kContent;
  indicator.weight = 1.0;
  ast.indicators.push_back(indicator);
  auto issues = validate_policy(ast, default_known_dimensions());
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_TRUE(issues[0].message.find("indicator has no dimensions") != std::string::npos);
}

TEST(PrintPolicy, DefaultPolicyRoundTrips) {
  PolicyAst ast = default_policy();
  EXPECT_EQ(parse_policy(print_policy(ast)), ast);
  EXPECT_TRUE(validate_policy(ast, default_known_dimensions()).empty());
}

TEST(PrintPolicy, GeneratedPoliciesRoundTrip) {
  std::mt19937 rng(101);
  for (int i = 0; i < 200; ++i) {
    PolicyAst ast = testref::random_policy(rng);
    std::string text = print_policy(ast);
    PolicyAst reparsed = parse_policy(text);
    EXPECT_EQ(reparsed, ast) << text;
  }
}

}  // namespace
