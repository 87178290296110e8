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

// Text input: line specifications, points and form files.

#pragma once

#include <stdexcept>
#include <string>

#include "klein3/klein.hpp"

namespace klein3 {

// Reports 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// "x0 x1 x2 x3 ; y0 y1 y2 y3" (two distinct points) or six Plücker
// coordinates "p01 p02 p03 p23 p31 p12" with Omega = 0.
Line parse_line_spec(const std::string& text);

// Four coordinates "x0 x1 x2 x3".
Point parse_point(const std::string& text);

// First line "4", then four rows of four entries; the matrix must be
// symmetric.
Mat parse_form(const std::string& text);
Mat load_form_file(const std::string& path);
// Same layout without the symmetry requirement.
Mat parse_matrix(const std::string& text);
Mat load_matrix_file(const std::string& path);

}  // namespace klein3
