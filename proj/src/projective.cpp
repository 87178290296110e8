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

#include "klein3/projective.hpp"

namespace klein3 {

Vec normalized(Vec v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Scalar inv = 1 / v[i];
    for (std::size_t j = i; j < v.size(); ++j) v[j] *= inv;
    return v;
  }
  throw GeometryError("zero vector has no projective point");
}

Point::Point(Vec coords) : coords_(normalized(std::move(coords))) {}

Subspace Subspace::empty(int ambient_dim) {
  return Subspace(ambient_dim, Mat(0, static_cast<std::size_t>(ambient_dim + 1)), {});
}

Subspace Subspace::whole(int ambient_dim) {
  return from_rows(ambient_dim, Mat::identity(static_cast<std::size_t>(ambient_dim + 1)));
}

Subspace Subspace::from_rows(int ambient_dim, const Mat& rows) {
  if (rows.cols() != static_cast<std::size_t>(ambient_dim + 1))
    throw GeometryError("coordinate length does not match ambient dimension");
  RrefResult r = rref(rows);
  return Subspace(ambient_dim, std::move(r.reduced), std::move(r.pivots));
}

Subspace Subspace::of(const Point& p) {
  Mat m(0, p.size());
  m.append_row(p.coords());
  return from_rows(p.ambient_dim(), m);
}

Subspace Subspace::hyperplane(const Vec& coeffs) {
  if (is_zero(coeffs)) throw GeometryError("hyperplane with zero coefficients");
  Mat eq(0, coeffs.size());
  eq.append_row(coeffs);
  return solutions(static_cast<int>(coeffs.size()) - 1, eq);
}

Subspace Subspace::solutions(int ambient_dim, const Mat& eqs) {
  if (eqs.rows() == 0) return whole(ambient_dim);
  return from_rows(ambient_dim, kernel(eqs));
}

Mat Subspace::equations() const {
  if (is_empty()) return Mat::identity(static_cast<std::size_t>(ambient_ + 1));
  return kernel(basis_);
}

bool Subspace::contains(const Point& p) const {
  if (p.ambient_dim() != ambient_) throw GeometryError("ambient dimension mismatch");
  if (is_empty()) return false;
  // Reduce p against the rref basis; p is inside iff nothing remains.
  Vec rest = p.coords();
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    Scalar f = rest[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= f * basis_(i, j);
  }
  return is_zero(rest);
}

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_ != ambient_) throw GeometryError("ambient dimension mismatch");
  for (std::size_t i = 0; i < s.basis_.rows(); ++i)
    if (!contains(Point(s.basis_.row(i)))) return false;
  return true;
}

Vec Subspace::coordinates_of(const Point& p) const {
  if (!contains(p)) throw GeometryError("point " + p.str() + " is not in the subspace");
  Vec c(basis_.rows());
  for (std::size_t i = 0; i < basis_.rows(); ++i) c[i] = p[pivots_[i]];
  return c;
}

Point Subspace::point_at(const Vec& coords) const {
  if (coords.size() != basis_.rows()) throw GeometryError("coordinate count mismatch");
  Vec v(basis_.cols(), Scalar(0));
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += coords[i] * basis_(i, j);
  return Point(std::move(v));
}

Point Subspace::as_point() const {
  if (dim() != 0)
    throw GeometryError("expected a point, got a subspace of dimension " + std::to_string(dim()));
  return Point(basis_.row(0));
}

std::string Subspace::str() const {
  if (is_empty()) return "{}";
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    if (i) out += ", ";
    out += to_string(basis_.row(i));
  }
  return out + "}";
}

Subspace span(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw GeometryError("ambient dimension mismatch");
  Mat rows = s.basis();
  for (std::size_t i = 0; i < t.basis().rows(); ++i) rows.append_row(t.basis().row(i));
  return Subspace::from_rows(s.ambient_dim(), rows);
}

Subspace span(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw GeometryError("span of nothing");
  Subspace acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = span(acc, parts[i]);
  return acc;
}

Subspace span(const Point& p, const Point& q) { return span(Subspace::of(p), Subspace::of(q)); }

Subspace span(const Subspace& s, const Point& p) { return span(s, Subspace::of(p)); }

Subspace meet(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw GeometryError("ambient dimension mismatch");
  if (s.is_empty() || t.is_empty()) return Subspace::empty(s.ambient_dim());
  Mat eqs = s.equations();
  Mat te = t.equations();
  for (std::size_t i = 0; i < te.rows(); ++i) eqs.append_row(te.row(i));
  return Subspace::solutions(s.ambient_dim(), eqs);
}

bool incident(const Point& p, const Subspace& s) { return s.contains(p); }

namespace {

// Coordinates of the four points in a common 2-dimensional basis.
std::vector<Vec> line_coordinates(const std::vector<Point>& pts) {
  for (const auto& p : pts)
    if (p.size() != pts.front().size()) throw GeometryError("ambient dimension mismatch");
  Subspace line = Subspace::of(pts.front());
  for (const auto& p : pts) line = span(line, p);
  if (line.dim() != 1) {
    throw GeometryError(line.dim() > 1 ? "points are not collinear"
                                       : "fewer than three distinct points");
  }
  std::vector<Vec> out;
  for (const auto& p : pts) out.push_back(line.coordinates_of(p));
  return out;
}

Scalar bracket(const Vec& x, const Vec& y) { return x[0] * y[1] - x[1] * y[0]; }

}  // namespace

CrossRatio cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto co = line_coordinates({a, b, c, d});
  const Vec &ca = co[0], &cb = co[1], &cc = co[2], &cd = co[3];
  Scalar num = bracket(ca, cc) * bracket(cb, cd);
  Scalar den = bracket(cb, cc) * bracket(ca, cd);
  if (sgn(den) == 0) {
    if (sgn(num) == 0) throw GeometryError("fewer than three distinct points");
    return {std::nullopt};
  }
  return {num / den};
}

Point harmonic_conjugate(const Point& a, const Point& b, const Point& c) {
  if (a == b || b == c || a == c) throw GeometryError("harmonic conjugate of coincident points");
  auto co = line_coordinates({a, b, c});
  // c = s a + t b, solved in line coordinates by Cramer's rule.
  Scalar det = bracket(co[0], co[1]);
  Scalar s = bracket(co[2], co[1]) / det;
  Scalar t = bracket(co[0], co[2]) / det;
  return Point(s * a.coords() - t * b.coords());
}

}  // namespace klein3
