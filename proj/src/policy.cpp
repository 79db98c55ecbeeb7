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

#include "trustir/policy.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <sstream>

#include "trustir/errors.hpp"
#include "trustir/text.hpp"

namespace trustir {

std::string_view indicator_kind_name(IndicatorKind kind) {
  switch (kind) {
    case IndicatorKind::kContent: return "CONTENT";
    case IndicatorKind::kContext: return "CONTEXT";
    case IndicatorKind::kRating: return "RATING";
  }
  return "?";
}

std::string_view compare_op_symbol(CompareOp op) {
  switch (op) {
    case CompareOp::kEq: return "=";
    case CompareOp::kNe: return "!=";
    case CompareOp::kLt: return "<";
    case CompareOp::kLe: return "<=";
    case CompareOp::kGt: return ">";
    case CompareOp::kGe: return ">=";
  }
  return "?";
}

namespace {

enum class TokenType { kKeyword, kIdent, kVar, kString, kNumber, kLBrace, kRBrace,
                       kLParen, kRParen, kOp, kEnd };

struct Token {
  TokenType type = TokenType::kEnd;
  std::string text;
  SourcePos pos;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {"POLICY", "CONTENT", "CONTEXT",
                                           "RATING", "WEIGHT", "REQUIRE", "WHERE"};
  return kw;
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '.' ||
         c == '-';
}

bool is_ident_shaped(const std::string& s) {
  if (s.empty() || !ident_start(s[0])) return false;
  for (char c : s) {
    if (!ident_char(c)) return false;
  }
  return true;
}

bool is_number_shaped(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '.') return false;
  std::size_t frac = ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i > frac && i == s.size();
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_blanks_and_comments();
      SourcePos pos{line_, column_};
      if (at_end()) {
        tokens.push_back({TokenType::kEnd, "", pos});
        return tokens;
      }
      char c = peek();
      if (c == '{') { tokens.push_back({TokenType::kLBrace, "{", pos}); advance(); continue; }
      if (c == '}') { tokens.push_back({TokenType::kRBrace, "}", pos}); advance(); continue; }
      if (c == '(') { tokens.push_back({TokenType::kLParen, "(", pos}); advance(); continue; }
      if (c == ')') { tokens.push_back({TokenType::kRParen, ")", pos}); advance(); continue; }
      if (c == '=') { tokens.push_back({TokenType::kOp, "=", pos}); advance(); continue; }
      if (c == '!') {
        advance();
        if (at_end() || peek() != '=') throw PolicyError(pos.line, pos.column, "expected '!='");
        advance();
        tokens.push_back({TokenType::kOp, "!=", pos});
        continue;
      }
      if (c == '<' || c == '>') {
        advance();
        std::string op(1, c);
        if (!at_end() && peek() == '=') { op += '='; advance(); }
        tokens.push_back({TokenType::kOp, op, pos});
        continue;
      }
      if (c == '"') { tokens.push_back(lex_string(pos)); continue; }
      if (c == '?') {
        advance();
        if (at_end() || !ident_start(peek())) {
          throw PolicyError(pos.line, pos.column, "expected identifier after '?'");
        }
        tokens.push_back({TokenType::kVar, "?" + lex_ident_text(), pos});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) { tokens.push_back(lex_number(pos)); continue; }
      if (ident_start(c)) {
        std::string text = lex_ident_text();
        TokenType type = keywords().count(text) ? TokenType::kKeyword : TokenType::kIdent;
        tokens.push_back({type, std::move(text), pos});
        continue;
      }
      throw PolicyError(pos.line, pos.column, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  bool at_end() const { return offset_ >= text_.size(); }
  char peek() const { return text_[offset_]; }

  void advance() {
    if (text_[offset_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++offset_;
  }

  void skip_blanks_and_comments() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string lex_ident_text() {
    std::string text;
    while (!at_end() && ident_char(peek())) {
      text.push_back(peek());
      advance();
    }
    return text;
  }

  Token lex_number(SourcePos pos) {
    std::string text;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      text.push_back(peek());
      advance();
    }
    if (!at_end() && peek() == '.') {
      text.push_back('.');
      advance();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw PolicyError(pos.line, pos.column, "malformed number '" + text + "'");
      }
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        text.push_back(peek());
        advance();
      }
    }
    return {TokenType::kNumber, std::move(text), pos};
  }

  Token lex_string(SourcePos pos) {
    advance();  // opening quote
    std::string text;
    while (true) {
      if (at_end() || peek() == '\n') {
        throw PolicyError(pos.line, pos.column, "unterminated string");
      }
      char c = peek();
      advance();
      if (c == '"') return {TokenType::kString, std::move(text), pos};
      if (c == '\\') {
        if (at_end()) throw PolicyError(pos.line, pos.column, "unterminated string");
        char escaped = peek();
        if (escaped != '"' && escaped != '\\') {
          throw PolicyError(line_, column_, std::string("invalid escape '\\") + escaped + "'");
        }
        text.push_back(escaped);
        advance();
      } else {
        text.push_back(c);
      }
    }
  }

  std::string_view text_;
  std::size_t offset_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  PolicyAst parse() {
    PolicyAst ast;
    expect_keyword("POLICY");
    Token name = expect(TokenType::kIdent, "policy name");
    ast.name = name.text;
    ast.pos = name.pos;
    expect(TokenType::kLBrace, "'{'");

    while (is_indicator_keyword(peek())) ast.indicators.push_back(parse_indicator());
    if (ast.indicators.empty()) {
      throw PolicyError(peek().pos.line, peek().pos.column,
                        "expected an indicator (CONTENT, CONTEXT or RATING)");
    }
    while (is_keyword(peek(), "REQUIRE")) ast.filters.push_back(parse_filter());
    expect(TokenType::kRBrace, "'}'");
    expect(TokenType::kEnd, "end of input");

    check_semantics(ast);
    return ast;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token take() { return tokens_[index_++]; }

  static bool is_keyword(const Token& token, std::string_view text) {
    return token.type == TokenType::kKeyword && token.text == text;
  }

  static bool is_indicator_keyword(const Token& token) {
    return is_keyword(token, "CONTENT") || is_keyword(token, "CONTEXT") ||
           is_keyword(token, "RATING");
  }

  Token expect(TokenType type, const std::string& what) {
    if (peek().type != type) {
      throw PolicyError(peek().pos.line, peek().pos.column,
                        "expected " + what + describe_actual());
    }
    return take();
  }

  Token expect_keyword(std::string_view text) {
    if (!is_keyword(peek(), text)) {
      throw PolicyError(peek().pos.line, peek().pos.column,
                        "expected " + std::string(text) + describe_actual());
    }
    return take();
  }

  std::string describe_actual() const {
    if (peek().type == TokenType::kEnd) return " before end of input";
    return ", got '" + peek().text + "'";
  }

  double parse_weight() {
    Token number = expect(TokenType::kNumber, "a number");
    errno = 0;
    double value = std::strtod(number.text.c_str(), nullptr);
    if (errno != 0) {
      throw PolicyError(number.pos.line, number.pos.column,
                        "weight '" + number.text + "' out of range");
    }
    return value;
  }

  PolicyIndicator parse_indicator() {
    Token kind_token = take();
    PolicyIndicator indicator;
    indicator.pos = kind_token.pos;
    if (kind_token.text == "CONTENT") indicator.kind = IndicatorKind::kContent;
    else if (kind_token.text == "CONTEXT") indicator.kind = IndicatorKind::kContext;
    else indicator.kind = IndicatorKind::kRating;

    expect_keyword("WEIGHT");
    indicator.weight = parse_weight();
    expect(TokenType::kLBrace, "'{'");
    while (peek().type == TokenType::kIdent) {
      Token name = take();
      PolicyDimension dim;
      dim.name = name.text;
      dim.pos = name.pos;
      expect_keyword("WEIGHT");
      dim.weight = parse_weight();
      indicator.dims.push_back(std::move(dim));
    }
    if (indicator.dims.empty()) {
      throw PolicyError(peek().pos.line, peek().pos.column, "expected a dimension");
    }
    expect(TokenType::kRBrace, "'}'");
    return indicator;
  }

  std::string parse_term() {
    const Token& token = peek();
    if (token.type == TokenType::kVar || token.type == TokenType::kIdent) return take().text;
    if (token.type == TokenType::kString) {
      if (!token.text.empty() && token.text.front() == '?') {
        throw PolicyError(token.pos.line, token.pos.column,
                          "string term must not begin with '?'");
      }
      return take().text;
    }
    throw PolicyError(token.pos.line, token.pos.column,
                      "expected a pattern term" + describe_actual());
  }

  PolicyFilter parse_filter() {
    PolicyFilter filter;
    filter.pos = expect_keyword("REQUIRE").pos;
    expect(TokenType::kLParen, "'('");
    for (auto& term : filter.pattern) term = parse_term();
    expect(TokenType::kRParen, "')'");
    expect_keyword("WHERE");

    Token var = expect(TokenType::kVar, "a '?' variable");
    filter.variable = var.text;
    Token op = expect(TokenType::kOp, "a comparison operator");
    if (op.text == "=") filter.op = CompareOp::kEq;
    else if (op.text == "!=") filter.op = CompareOp::kNe;
    else if (op.text == "<") filter.op = CompareOp::kLt;
    else if (op.text == "<=") filter.op = CompareOp::kLe;
    else if (op.text == ">") filter.op = CompareOp::kGt;
    else filter.op = CompareOp::kGe;

    const Token& literal = peek();
    if (literal.type != TokenType::kString && literal.type != TokenType::kNumber &&
        literal.type != TokenType::kIdent) {
      throw PolicyError(literal.pos.line, literal.pos.column,
                        "expected a literal" + describe_actual());
    }
    filter.literal = take().text;

    bool bound = false;
    for (const std::string& term : filter.pattern) bound = bound || term == filter.variable;
    if (!bound) {
      throw PolicyError(var.pos.line, var.pos.column,
                        "condition variable " + filter.variable + " not bound by its pattern");
    }
    return filter;
  }

  void check_semantics(const PolicyAst& ast) const {
    std::set<IndicatorKind> kinds;
    double weight_sum = 0.0;
    for (const PolicyIndicator& indicator : ast.indicators) {
      if (!kinds.insert(indicator.kind).second) {
        throw PolicyError(indicator.pos.line, indicator.pos.column,
                          std::string(indicator_kind_name(indicator.kind)) + " declared twice");
      }
      weight_sum += indicator.weight;
      std::set<std::string> names;
      for (const PolicyDimension& dim : indicator.dims) {
        if (!names.insert(dim.name).second) {
          throw PolicyError(dim.pos.line, dim.pos.column,
                            "dimension " + dim.name + " declared twice");
        }
      }
    }
    if (weight_sum <= 0.0) {
      throw PolicyError(ast.pos.line, ast.pos.column, "indicator weights sum to zero");
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

std::string print_term(const std::string& term) {
  if (!term.empty() && term.front() == '?') return term;  // variable
  if (is_ident_shaped(term) && keywords().count(term) == 0) return term;
  std::string quoted = "\"";
  for (char c : term) {
    if (c == '"' || c == '\\') quoted.push_back('\\');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string print_literal(const std::string& literal) {
  if (is_number_shaped(literal)) return literal;
  return print_term(literal);
}

}  // namespace

PolicyAst parse_policy(std::string_view text) {
  return Parser(Lexer(text).run()).parse();
}

std::string print_policy(const PolicyAst& ast) {
  std::ostringstream out;
  out << "POLICY " << ast.name << " {\n";
  for (const PolicyIndicator& indicator : ast.indicators) {
    out << "  " << indicator_kind_name(indicator.kind) << " WEIGHT "
        << format_double_fixed(indicator.weight) << " {\n";
    for (const PolicyDimension& dim : indicator.dims) {
      out << "    " << dim.name << " WEIGHT " << format_double_fixed(dim.weight) << "\n";
    }
    out << "  }\n";
  }
  for (const PolicyFilter& filter : ast.filters) {
    out << "  REQUIRE (";
    for (std::size_t i = 0; i < filter.pattern.size(); ++i) {
      if (i > 0) out << ' ';
      out << print_term(filter.pattern[i]);
    }
    out << ") WHERE " << filter.variable << ' ' << compare_op_symbol(filter.op) << ' '
        << print_literal(filter.literal) << "\n";
  }
  out << "}\n";
  return out.str();
}

const KnownDimensions& default_known_dimensions() {
  static const KnownDimensions known = {
      {IndicatorKind::kContent, {"relevancy", "objectivity"}},
      {IndicatorKind::kContext, {"timeliness", "believability"}},
      {IndicatorKind::kRating, {"rating"}},
  };
  return known;
}

std::vector<ValidationIssue> validate_policy(const PolicyAst& ast, const KnownDimensions& known) {
  std::vector<ValidationIssue> issues;
  for (const PolicyIndicator& indicator : ast.indicators) {
    std::string kind(indicator_kind_name(indicator.kind));
    if (indicator.dims.empty()) {
      issues.push_back({indicator.pos, kind + " indicator has no dimensions"});
      continue;
    }
    auto allowed = known.find(indicator.kind);
    for (const PolicyDimension& dim : indicator.dims) {
      if (allowed == known.end() || allowed->second.count(dim.name) == 0) {
        issues.push_back({dim.pos, dim.name + " not a " + kind + " dimension"});
      }
    }
  }
  return issues;
}

PolicyAst default_policy() {
  PolicyAst ast;
  ast.name = "balanced";
  for (IndicatorKind kind :
       {IndicatorKind::kContent, IndicatorKind::kContext, IndicatorKind::kRating}) {
    PolicyIndicator indicator;
    indicator.kind = kind;
    indicator.weight = 1.0;
    for (const std::string& name : default_known_dimensions().at(kind)) {
      indicator.dims.push_back({name, 1.0, {}});
    }
    ast.indicators.push_back(std::move(indicator));
  }
  return ast;
}

}  // namespace trustir
