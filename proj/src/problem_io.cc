// Copyright 2026 The scsolve Authors.
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

#include "scsolve/problem_io.h"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <vector>

#include "json.hpp"
#include "scsolve/error.h"

namespace scs {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) {
  throw_error(ErrorCode::kValidationError, what);
}

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what, 0, 0, field);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void check_length(const Vector& v, std::size_t expected, const char* field,
                  const char* dim) {
  if (v.size() != expected) {
    invalid(std::string(field) + " length " + std::to_string(v.size()) +
            " does not match " + dim + " = " + std::to_string(expected));
  }
}

void check_finite(const Vector& v, const char* field) {
  for (double x : v) {
    if (!std::isfinite(x)) invalid(std::string(field) + " has a non-finite entry");
  }
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) bad_field(field, "expected a number");
  return j.get<double>();
}

Vector number_array(const json& j, const std::string& field) {
  if (!j.is_array()) bad_field(field, "expected an array of numbers");
  Vector out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(number(e, field));
  return out;
}

std::size_t count(const json& root, const char* field) {
  if (!root.contains(field)) bad_field(field, "missing");
  const json& j = root.at(field);
  if (!j.is_number_unsigned()) bad_field(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

void validate_problem(const ProblemFile& p, bool require_objective) {
  if (p.a.size() != p.m * p.n) {
    invalid("A has " + std::to_string(p.a.size()) + " entries, expected m*n = " +
            std::to_string(p.m * p.n));
  }
  check_length(p.b, p.m, "b", "m");
  if (p.c) {
    check_length(*p.c, p.n, "c", "n");
  } else if (require_objective) {
    invalid("c is required");
  }
  check_finite(p.a, "A");
  check_finite(p.b, "b");
  if (p.c) check_finite(*p.c, "c");
  if (p.z_star && !std::isfinite(*p.z_star)) invalid("z_star is not finite");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    throw ParseError("malformed JSON: " + std::string(e.what()), line, col);
  } catch (const json::out_of_range& e) {
    invalid("number out of range: " + std::string(e.what()));
  }
}

ProblemFile parse_structured(std::string_view text, const ParseOptions& opts) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ParseError("top level must be an object", 1, 1);
  static const std::set<std::string> kKnown = {"name", "m", "n", "A",
                                               "b",    "c", "z_star"};
  for (const auto& [key, value] : root.items()) {
    if (!kKnown.count(key)) bad_field(key, "unknown field");
  }

  ProblemFile p;
  if (root.contains("name")) {
    if (!root["name"].is_string()) bad_field("name", "expected a string");
    p.name = root["name"].get<std::string>();
  }
  p.m = count(root, "m");
  p.n = count(root, "n");

  if (!root.contains("A")) bad_field("A", "missing");
  const json& a = root["A"];
  if (!a.is_array()) bad_field("A", "expected an array");
  const bool nested = !a.empty() && a.front().is_array();
  if (nested) {
    if (a.size() != p.m) {
      invalid("A has " + std::to_string(a.size()) + " rows, expected m = " +
              std::to_string(p.m));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Vector row = number_array(a[i], "A");
      if (row.size() != p.n) {
        invalid("A row " + std::to_string(i + 1) + " has " +
                std::to_string(row.size()) + " entries, expected n = " +
                std::to_string(p.n));
      }
      p.a.insert(p.a.end(), row.begin(), row.end());
    }
  } else {
    p.a = number_array(a, "A");
  }

  if (!root.contains("b")) bad_field("b", "missing");
  p.b = number_array(root["b"], "b");
  if (root.contains("c")) p.c = number_array(root["c"], "c");
  if (root.contains("z_star")) p.z_star = number(root["z_star"], "z_star");
  validate_problem(p, opts.require_objective);
  return p;
}

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
      ++i;
      ++col;
    } else {
      const std::size_t start = i;
      const std::size_t start_col = col;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '#' && text[i] != ',') {
        ++i;
        ++col;
      }
      out.push_back(Token{text.substr(start, i - start), line, start_col});
    }
  }
  return out;
}

double token_number(const Token& t, const char* field) {
  double v = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (*first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec == std::errc::result_out_of_range) {
    invalid(std::string(field) + " entry '" + std::string(t.text) +
            "' is out of range");
  }
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError("expected a number for " + std::string(field) + ", got '" +
                         std::string(t.text) + "'",
                     t.line, t.column, field);
  }
  if (!std::isfinite(v)) {
    invalid(std::string(field) + " has a non-finite entry");
  }
  return v;
}

std::size_t token_count(const Token& t, const char* field) {
  std::size_t v = 0;
  const char* last = t.text.data() + t.text.size();
  const auto res = std::from_chars(t.text.data(), last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError("expected a non-negative integer for " +
                         std::string(field) + ", got '" + std::string(t.text) +
                         "'",
                     t.line, t.column, field);
  }
  return v;
}

ProblemFile parse_plain(std::string_view text, const ParseOptions& opts) {
  const std::vector<Token> tokens = tokenize(text);
  std::size_t pos = 0;
  std::size_t last_line = 1;
  auto next = [&](const char* field) -> const Token& {
    if (pos >= tokens.size()) {
      throw ParseError("unexpected end of input while reading " +
                           std::string(field),
                       last_line, 0, field);
    }
    last_line = tokens[pos].line;
    return tokens[pos++];
  };

  ProblemFile p;
  if (!tokens.empty() && tokens[0].text == "name") {
    ++pos;
    p.name = std::string(next("name").text);
  }
  p.m = token_count(next("m"), "m");
  p.n = token_count(next("n"), "n");
  for (std::size_t k = 0; k < p.m * p.n; ++k) p.a.push_back(token_number(next("A"), "A"));
  for (std::size_t k = 0; k < p.m; ++k) p.b.push_back(token_number(next("b"), "b"));
  if (pos < tokens.size() || opts.require_objective) {
    Vector c;
    for (std::size_t k = 0; k < p.n; ++k) c.push_back(token_number(next("c"), "c"));
    p.c = std::move(c);
  }
  if (pos < tokens.size()) p.z_star = token_number(next("z_star"), "z_star");
  if (pos < tokens.size()) {
    const Token& t = tokens[pos];
    throw ParseError("unexpected trailing token '" + std::string(t.text) + "'",
                     t.line, t.column);
  }
  validate_problem(p, opts.require_objective);
  return p;
}

void append_array(std::string& out, std::span<const double> v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_shortest(v[i]);
  }
  out += ']';
}

}  // namespace

CanonicalLp ProblemFile::to_canonical() const {
  if (!c) invalid("c is required");
  CanonicalLp lp{DenseMatrix(m, n, a), b, *c};
  lp.validate();
  return lp;
}

EqualityPolyhedron ProblemFile::to_polyhedron() const {
  EqualityPolyhedron p{DenseMatrix(m, n, a), b};
  p.validate();
  return p;
}

ProblemFile parse_problem(std::string_view text, const ParseOptions& opts) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("empty input", 1, 1);
  if (text[i] == '{') return parse_structured(text, opts);
  return parse_plain(text, opts);
}

std::string format_shortest(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string serialize_problem(const ProblemFile& p) {
  std::string out = "{\n";
  out += "  \"name\": " + json(p.name).dump() + ",\n";
  out += "  \"m\": " + std::to_string(p.m) + ",\n";
  out += "  \"n\": " + std::to_string(p.n) + ",\n";
  out += "  \"A\": [";
  for (std::size_t i = 0; i < p.m; ++i) {
    out += i == 0 ? "\n    " : ",\n    ";
    append_array(out, std::span<const double>(p.a).subspan(i * p.n, p.n));
  }
  out += p.m == 0 ? "],\n" : "\n  ],\n";
  out += "  \"b\": ";
  append_array(out, p.b);
  if (p.c) {
    out += ",\n  \"c\": ";
    append_array(out, *p.c);
  }
  if (p.z_star) out += ",\n  \"z_star\": " + format_shortest(*p.z_star);
  out += "\n}\n";
  return out;
}

ScsResult parse_solution(std::string_view text, const ProblemFile& problem) {
  const json root = parse_json(text);
  if (!root.is_object()) throw ParseError("top level must be an object", 1, 1);
  static const std::set<std::string> kKnown = {"name", "x", "u", "y", "v",
                                               "z_star"};
  for (const auto& [key, value] : root.items()) {
    if (!kKnown.count(key)) bad_field(key, "unknown field");
  }
  auto vec = [&](const char* field) {
    if (!root.contains(field)) bad_field(field, "missing");
    return number_array(root[field], field);
  };
  ScsResult r;
  r.x_bar = vec("x");
  r.u_bar = vec("u");
  r.y_bar = vec("y");
  r.v_bar = vec("v");
  check_length(r.x_bar, problem.n, "x", "n");
  check_length(r.v_bar, problem.n, "v", "n");
  check_length(r.u_bar, problem.m, "u", "m");
  check_length(r.y_bar, problem.m, "y", "m");
  for (const Vector* v : {&r.x_bar, &r.u_bar, &r.y_bar, &r.v_bar}) {
    check_finite(*v, "solution");
  }
  if (root.contains("z_star")) r.z_star = number(root["z_star"], "z_star");
  return r;
}

}  // namespace scs
