// Copyright 2026 The klein3 Authors.
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

#include "klein3/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace klein3 {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Whitespace-separated tokens; ';' always stands alone.
std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  Token cur{"", 0, 0};
  auto flush = [&] {
    if (!cur.text.empty()) out.push_back(cur);
    cur.text.clear();
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch == ';') {
      flush();
      out.push_back({";", line, col});
    } else {
      if (cur.text.empty()) cur = {"", line, col};
      cur.text += ch;
    }
    ++col;
  }
  flush();
  return out;
}

Scalar scalar_at(const Token& t) {
  try {
    return parse_scalar(t.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(t.line, t.column, e.what());
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Line parse_line_spec(const std::string& text) {
  const std::vector<Token> toks = tokenize(text);
  if (toks.empty()) throw ParseError(1, 1, "empty line specification");
  std::size_t semis = 0;
  for (const auto& t : toks) semis += t.text == ";";
  if (semis == 0) {
    if (toks.size() != 6)
      throw ParseError(toks.back().line, toks.back().column,
                       "expected 6 Plücker coordinates, got " + std::to_string(toks.size()));
    Vec p;
    for (const auto& t : toks) p.push_back(scalar_at(t));
    if (sgn(omega(p)) != 0) throw ParseError(toks[0].line, toks[0].column, "Omega(p) = " + omega(p).get_str() + ", not 0");
    if (is_zero(p)) throw ParseError(toks[0].line, toks[0].column, "zero Plücker vector");
    return Line::from_pluecker(p);
  }
  if (semis > 1) {
    std::size_t seen = 0;
    for (const auto& t : toks)
      if (t.text == ";" && ++seen == 2) throw ParseError(t.line, t.column, "more than one ';'");
  }
  Vec x, y;
  bool second = false;
  for (const auto& t : toks) {
    if (t.text == ";") {
      if (x.size() != 4) throw ParseError(t.line, t.column, "first point needs 4 coordinates, got " + std::to_string(x.size()));
      second = true;
      continue;
    }
    (second ? y : x).push_back(scalar_at(t));
  }
  if (y.size() != 4)
    throw ParseError(toks.back().line, toks.back().column, "second point needs 4 coordinates, got " + std::to_string(y.size()));
  if (is_zero(x) || is_zero(y)) throw ParseError(toks[0].line, toks[0].column, "zero point");
  const Point px(x), py(y);
  if (px == py) throw ParseError(toks[0].line, toks[0].column, "the two points coincide");
  return Line::through(px, py);
}

Point parse_point(const std::string& text) {
  const std::vector<Token> toks = tokenize(text);
  if (toks.size() != 4) {
    const std::size_t col = toks.empty() ? 1 : toks.back().column;
    throw ParseError(1, col, "expected 4 point coordinates, got " + std::to_string(toks.size()));
  }
  Vec x;
  for (const auto& t : toks) {
    if (t.text == ";") throw ParseError(t.line, t.column, "unexpected ';'");
    x.push_back(scalar_at(t));
  }
  if (is_zero(x)) throw ParseError(toks[0].line, toks[0].column, "zero point");
  return Point(x);
}

namespace {

Mat parse_square(const std::string& text, bool symmetric) {
  std::vector<std::vector<Token>> rows;
  for (const Token& t : tokenize(text)) {
    if (t.text == ";") throw ParseError(t.line, t.column, "unexpected ';'");
    if (rows.empty() || rows.back().back().line != t.line) rows.emplace_back();
    rows.back().push_back(t);
  }
  if (rows.empty()) throw ParseError(1, 1, "empty form file");
  const auto& head = rows[0];
  if (head.size() != 1 || head[0].text != "4") throw ParseError(head[0].line, head[0].column, "first line must be \"4\"");
  if (rows.size() != 5) {
    const Token& t = rows.back().back();
    throw ParseError(t.line, t.column, "expected 4 rows, got " + std::to_string(rows.size() - 1));
  }
  Mat m(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& r = rows[i + 1];
    if (r.size() != 4) throw ParseError(r.back().line, r.back().column, "row needs 4 entries, got " + std::to_string(r.size()));
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = scalar_at(r[j]);
  }
  for (std::size_t i = 0; symmetric && i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (m(i, j) != m(j, i)) {
        const Token& t = rows[i + 1][j];
        throw ParseError(t.line, t.column, "form is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  return m;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Mat parse_form(const std::string& text) { return parse_square(text, true); }
Mat parse_matrix(const std::string& text) { return parse_square(text, false); }
Mat load_form_file(const std::string& path) { return parse_form(slurp(path)); }
Mat load_matrix_file(const std::string& path) { return parse_matrix(slurp(path)); }

}  // namespace klein3
