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

// Exact rational scalars and dense linear algebra over them.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace klein3 {

// GMP rationals are kept canonical by every arithmetic operation, so equality
// is structural.
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int sign(const Scalar& s);

// Square root in the rationals, if one exists. The returned root is >= 0.
std::optional<Scalar> square_root(const Scalar& s);
inline bool is_square(const Scalar& s) { return square_root(s).has_value(); }

// Accepts "a", "-a", "a/b". Throws std::invalid_argument on malformed text or
// a zero denominator.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);
std::string to_string(const Vec& v);

Scalar dot(const Vec& x, const Vec& y);
bool is_zero(const Vec& v);
Vec operator+(const Vec& x, const Vec& y);
Vec operator-(const Vec& x, const Vec& y);
Vec operator*(const Scalar& s, const Vec& v);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(std::size_t n);
  static Mat diagonal(const Vec& d);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void append_row(const Vec& v);
  Mat transposed() const;

  bool is_zero() const;
  bool is_symmetric() const;

  // True iff this == s * other for some nonzero s.
  bool proportional_to(const Mat& other) const;

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
Mat operator*(const Scalar& s, const Mat& m);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);

// Rows in brackets: [(1,0),(0,1)].
std::string to_string(const Mat& m);
// x^T m y
Scalar bilinear(const Vec& x, const Mat& m, const Vec& y);

struct RrefResult {
  Mat reduced;  // zero rows removed
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row-echelon form with first-nonzero pivoting. The returned matrix
// holds only the nonzero rows.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

// Rows form a basis (in reduced row-echelon form) of {k : m k = 0}.
Mat kernel(const Mat& m);

std::optional<Mat> inverse(const Mat& m);
Scalar determinant(const Mat& m);

// Rational congruence diagonalization of a symmetric matrix: returns the
// diagonal d and a matrix p with p^T s p = diag(d).
struct CongruenceDiagonal {
  Vec diagonal;
  Mat transform;
};
CongruenceDiagonal diagonalize_symmetric(const Mat& s);

// +1 / -1 if the symmetric matrix is positive / negative definite, 0 otherwise.
int definite_sign(const Mat& s);

}  // namespace klein3
