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

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace trustir {

// Quality policies are written in a deliberately tiny language: a named
// policy holds weighted indicators with weighted dimensions, plus REQUIRE
// filters pairing one quad pattern with one comparison.
//
//   policy    := "POLICY" IDENT "{" indicator+ filter* "}"
//   indicator := ("CONTENT"|"CONTEXT"|"RATING") "WEIGHT" NUMBER "{" dim+ "}"
//   dim       := IDENT "WEIGHT" NUMBER
//   filter    := "REQUIRE" "(" term term term term ")" "WHERE" VAR OP literal
//   term      := VAR | STRING | IDENT      VAR := "?" IDENT
//   OP        := "=" | "!=" | "<" | "<=" | ">" | ">="
//
// "#" starts a comment running to end of line. Whitespace is insignificant.
// The reserved variable ?page denotes the candidate page's graph/URL.

enum class IndicatorKind { kContent, kContext, kRating };

std::string_view indicator_kind_name(IndicatorKind kind);  // "CONTENT" etc.

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view compare_op_symbol(CompareOp op);

struct SourcePos {
  int line = 0;
  int column = 0;
};

struct PolicyDimension {
  std::string name;
  double weight = 0.0;
  SourcePos pos;

  friend bool operator==(const PolicyDimension& a, const PolicyDimension& b) {
    return a.name == b.name && a.weight == b.weight;
  }
};

struct PolicyIndicator {
  IndicatorKind kind = IndicatorKind::kContent;
  double weight = 0.0;
  std::vector<PolicyDimension> dims;
  SourcePos pos;

  friend bool operator==(const PolicyIndicator& a, const PolicyIndicator& b) {
    return a.kind == b.kind && a.weight == b.weight && a.dims == b.dims;
  }
};

/// One REQUIRE: a quad pattern ('?'-prefixed entries are variables) plus a
/// comparison over one of the pattern's variables.
struct PolicyFilter {
  std::array<std::string, 4> pattern;
  std::string variable;  // '?'-prefixed, bound by the pattern
  CompareOp op = CompareOp::kEq;
  std::string literal;
  SourcePos pos;

  friend bool operator==(const PolicyFilter& a, const PolicyFilter& b) {
    return a.pattern == b.pattern && a.variable == b.variable && a.op == b.op &&
           a.literal == b.literal;
  }
};

struct PolicyAst {
  std::string name;
  std::vector<PolicyIndicator> indicators;
  std::vector<PolicyFilter> filters;
  SourcePos pos;

  friend bool operator==(const PolicyAst& a, const PolicyAst& b) {
    return a.name == b.name && a.indicators == b.indicators && a.filters == b.filters;
  }
};

/// Parses policy text. Throws PolicyError (line:column) on syntax errors and
/// on violated structural invariants: duplicate indicator kinds, duplicate
/// dimensions within an indicator, indicator weights summing to zero, and
/// filter conditions over variables their pattern does not bind.
PolicyAst parse_policy(std::string_view text);

/// Canonical textual form; parse_policy(print_policy(ast)) is structurally
/// identical to ast for every valid policy.
std::string print_policy(const PolicyAst& ast);

struct ValidationIssue {
  SourcePos pos;
  std::string message;
};

using KnownDimensions = std::map<IndicatorKind, std::set<std::string>>;

/// Dimension names each indicator kind may score.
const KnownDimensions& default_known_dimensions();

/// Checks every dimension name against its indicator's known set and that no
/// indicator is empty. Issues are returned, never thrown; empty means ok.
std::vector<ValidationIssue> validate_policy(const PolicyAst& ast, const KnownDimensions& known);

/// Built-in policy used when a run supplies none: all three indicators at
/// equal weight, every known dimension at weight 1, no filters.
PolicyAst default_policy();

}  // namespace trustir
