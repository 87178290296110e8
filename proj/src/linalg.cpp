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

#include "klein3/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace klein3 {

int sign(const Scalar& s) { return sgn(s); }

std::optional<Scalar> square_root(const Scalar& s) {
  if (sgn(s) < 0) return std::nullopt;
  const mpz_class& num = s.get_num();
  const mpz_class& den = s.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Scalar root(rn, rd);
  root.canonicalize();
  return root;
}

namespace {

bool valid_integer(std::string_view t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view t) {
    return std::string(!t.empty() && t[0] == '+' ? t.substr(1) : t);
  };
  mpz_class n(strip_plus(num), 10);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

Scalar dot(const Vec& x, const Vec& y) {
  Scalar acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vec operator+(const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

Vec operator-(const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
  return out;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::diagonal(const Vec& d) {
  Mat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Mat::append_row(const Vec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

bool Mat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Mat::proportional_to(const Mat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  // Find the scale from the first nonzero entry of `other`.
  std::optional<Scalar> scale;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (sgn(other.data_[i]) != 0) {
      scale = data_[i] / other.data_[i];
      break;
    }
  }
  if (!scale || sgn(*scale) == 0) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != *scale * other.data_[i]) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(a.rows(), Scalar(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

Mat operator*(const Scalar& s, const Mat& m) {
  Mat out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) *= s;
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

std::string to_string(const Mat& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += to_string(m.row(i));
  }
  return out + "]";
}

Scalar bilinear(const Vec& x, const Mat& m, const Vec& y) { return dot(x, m * y); }

RrefResult rref(const Mat& m) {
  Mat a = m;
  RrefResult res;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead_row, j));
    Scalar inv = 1 / a(lead_row, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || sgn(a(r, c)) == 0) continue;
      Scalar f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(lead_row, j);
    }
    res.pivots.push_back(c);
    ++lead_row;
  }
  res.rank = lead_row;
  res.reduced = Mat(0, a.cols());
  for (std::size_t r = 0; r < res.rank; ++r) res.reduced.append_row(a.row(r));
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel(const Mat& m) {
  RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Mat basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec k(n, Scalar(0));
    k[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) k[r.pivots[i]] = -r.reduced(i, free);
    basis.append_row(k);
  }
  return rref(basis).reduced;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult res = rref(aug);
  if (res.rank < n || res.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = res.reduced(r, n + c);
  return inv;
}

Scalar determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      Scalar f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

CongruenceDiagonal diagonalize_symmetric(const Mat& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("diagonalize_symmetric: not symmetric");
  const std::size_t n = s.rows();
  Mat d = s;
  Mat p = Mat::identity(n);
  // Congruence steps act on both rows and columns of d; p accumulates the
  // column operations.
  auto add_multiple = [&](std::size_t target, std::size_t src, const Scalar& f) {
    for (std::size_t j = 0; j < n; ++j) d(target, j) += f * d(src, j);
    for (std::size_t i = 0; i < n; ++i) d(i, target) += f * d(i, src);
    for (std::size_t i = 0; i < n; ++i) p(i, target) += f * p(i, src);
  };
  auto swap_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(p(i, a), p(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(d(k, k)) == 0) {
      std::size_t j = k + 1;
      while (j < n && sgn(d(j, j)) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && sgn(d(k, j)) == 0) ++j;
        if (j == n) continue;  // row k already zero
        add_multiple(k, j, Scalar(1));  // d(k,k) becomes 2 d(k,j)
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(d(i, k)) == 0) continue;
      Scalar f = -d(i, k) / d(k, k);
      add_multiple(i, k, f);
    }
  }
  Vec diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = d(i, i);
  return {diag, p};
}

int definite_sign(const Mat& s) {
  if (!s.is_symmetric() || s.rows() == 0) return 0;
  // Plain symmetric elimination: a definite form never meets a zero pivot.
  Mat a = s;
  const std::size_t n = a.rows();
  int expected = 0;
  for (std::size_t k = 0; k < n; ++k) {
    int sg = sgn(a(k, k));
    if (sg == 0) return 0;
    if (expected == 0) expected = sg;
    if (sg != expected) return 0;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      Scalar f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return expected;
}

}  // namespace klein3
