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

#include "klein3/klein.hpp"

namespace klein3 {

namespace {

// p_ij for arbitrary i != j from the stored sextuple.
Scalar coordinate(const Vec& p, int i, int j) {
  for (std::size_t k = 0; k < kPlueckerPairs.size(); ++k) {
    auto [a, b] = kPlueckerPairs[k];
    if (a == i && b == j) return p[k];
    if (a == j && b == i) return -p[k];
  }
  return 0;
}

}  // namespace

Vec wedge(const Vec& x, const Vec& y) {
  Vec p(6);
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kPlueckerPairs[k];
    p[k] = x[i] * y[j] - x[j] * y[i];
  }
  return p;
}

Scalar omega(const Vec& p) { return p[0] * p[3] + p[1] * p[4] + p[2] * p[5]; }

Scalar omega_bilinear(const Vec& p, const Vec& q) {
  return p[0] * q[3] + p[3] * q[0] + p[1] * q[4] + p[4] * q[1] + p[2] * q[5] + p[5] * q[2];
}

const Mat& klein_gram() {
  static const Mat g = [] {
    Mat m(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
      m(i, i + 3) = 1;
      m(i + 3, i) = 1;
    }
    return m;
  }();
  return g;
}

const Mat& swap_matrix() { return klein_gram(); }

Mat second_compound(const Mat& m) {
  if (m.rows() != 4 || m.cols() != 4) throw GeometryError("second_compound expects 4x4");
  Mat c(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    auto [i, j] = kPlueckerPairs[r];
    for (std::size_t s = 0; s < 6; ++s) {
      auto [k, l] = kPlueckerPairs[s];
      c(r, s) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
    }
  }
  return c;
}

Line Line::through(const Point& x, const Point& y) {
  if (x.size() != 4 || y.size() != 4) throw GeometryError("line points must lie in PG(3)");
  Vec p = wedge(x.coords(), y.coords());
  if (is_zero(p)) throw GeometryError("a line needs two distinct points");
  return Line(normalized(std::move(p)));
}

Line Line::from_pluecker(Vec p) {
  if (p.size() != 6) throw GeometryError("Plücker vector must have 6 entries");
  if (is_zero(p)) throw GeometryError("zero Plücker vector");
  if (sgn(omega(p)) != 0)
    throw GeometryError("not on the Klein quadric: Omega" + to_string(p) + " = " +
                        to_string(omega(p)));
  return Line(normalized(std::move(p)));
}

std::pair<Point, Point> Line::points() const {
  // Columns of the skew matrix (p_ij) are of the form X (Y.u) - Y (X.u); they
  // span the line.
  Mat s(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = coordinate(p_, i, j);
  RrefResult r = rref(s);
  if (r.rank != 2) throw GeometryError("Plücker matrix does not have rank 2");
  return {Point(r.reduced.row(0)), Point(r.reduced.row(1))};
}

Subspace Line::subspace() const {
  auto [x, y] = points();
  return span(x, y);
}

bool Line::contains(const Point& x) const { return subspace().contains(x); }

bool lines_meet(const Line& a, const Line& b) {
  return sgn(omega_bilinear(a.pluecker(), b.pluecker())) == 0;
}

Point intersection_point(const Line& a, const Line& b) {
  if (a == b) throw GeometryError("intersection of a line with itself");
  return meet(a.subspace(), b.subspace()).as_point();
}

Mat alpha_matrix(const Polarity& pi) {
  Mat a = swap_matrix() * second_compound(pi.form());
  Mat sq = a * a;
  const Scalar sigma = sq(0, 0);
  if (sgn(sigma) == 0 || !(sq == sigma * Mat::identity(6)))
    throw NotClassical("alpha^2 is not a scalar multiple of the identity");
  auto root = square_root(sigma);
  if (!root) throw NotClassical("alpha^2 = " + to_string(sigma) + " I and " +
                                to_string(sigma) + " is not a square in Q");
  return Scalar(1 / *root) * a;
}

Mat restricted_klein_form(const Subspace& s) {
  const Mat& b = s.basis();
  return b * klein_gram() * b.transposed();
}

InvariantPlanes invariant_planes(const Mat& alpha) {
  if (!(alpha * alpha == Mat::identity(6))) throw NotClassical("alpha is not an involution");
  Subspace plus = Subspace::solutions(5, alpha - Mat::identity(6));
  Subspace minus = Subspace::solutions(5, alpha + Mat::identity(6));
  if (plus.dim() != 2 || minus.dim() != 2) {
    throw NotClassical("alpha eigenspaces have vector dimensions (" +
                       std::to_string(plus.dim() + 1) + "," + std::to_string(minus.dim() + 1) +
                       "), expected (3,3)");
  }
  if (!meet(plus, minus).is_empty()) throw NotClassical("invariant planes are not skew");
  if (!(Subspace::solutions(5, plus.basis() * klein_gram()) == minus))
    throw NotClassical("invariant planes are not kappa-polar");
  if (definite_sign(restricted_klein_form(plus)) == 0 ||
      definite_sign(restricted_klein_form(minus)) == 0)
    throw NotClassical("an invariant plane meets the Klein quadric");
  return {plus, minus};
}

namespace {

// Projector onto `target` along `center` (complementary subspaces of PG(5)).
Mat projector(const Subspace& target, const Subspace& center) {
  Mat basis = target.basis();
  for (std::size_t i = 0; i < center.basis().rows(); ++i) basis.append_row(center.basis().row(i));
  if (basis.rows() != 6) throw GeometryError("projection planes are not complementary");
  auto inv = inverse(basis.transposed());
  if (!inv) throw GeometryError("projection planes are not complementary");
  Mat keep(6, 6);
  for (std::size_t i = 0; i < target.basis().rows(); ++i) keep(i, i) = 1;
  return basis.transposed() * keep * *inv;
}

}  // namespace

EllipticSpace::EllipticSpace(Polarity pi, Mat alpha, Subspace left, Subspace right)
    : pi_(std::move(pi)),
      alpha_(std::move(alpha)),
      left_(std::move(left)),
      right_(std::move(right)),
      kappa_left_(restricted_klein_form(left_)),
      kappa_right_(restricted_klein_form(right_)),
      to_left_(projector(left_, right_)),
      to_right_(projector(right_, left_)) {}

EllipticSpace::EllipticSpace(Polarity pi) : EllipticSpace([&] {
    if (!certify_anisotropic(pi.form()))
      throw GeometryError("form is not certified anisotropic (not definite)");
    Mat a = alpha_matrix(pi);
    InvariantPlanes planes = invariant_planes(a);
    return EllipticSpace(pi, std::move(a), std::move(planes.left), std::move(planes.right));
  }()) {}

EllipticSpace EllipticSpace::with_planes_for_testing(Polarity pi, Subspace left, Subspace right) {
  Mat a = alpha_matrix(pi);
  return EllipticSpace(std::move(pi), std::move(a), std::move(left), std::move(right));
}

Line EllipticSpace::polar(const Line& a) const {
  return Line::from_pluecker(alpha_ * a.pluecker());
}

Point EllipticSpace::project_onto(Side s, const Point& x) const {
  Vec v = (s == Side::Left ? to_left_ : to_right_) * x.coords();
  if (is_zero(v))
    throw GeometryError("point " + x.str() + " lies in the centre of the projection");
  return Point(std::move(v));
}

Point EllipticSpace::project_lambda(const Point& x) const { return project_onto(Side::Right, x); }

Point EllipticSpace::project_rho(const Point& x) const { return project_onto(Side::Left, x); }

Point EllipticSpace::project_lambda_by_meet(const Point& x) const {
  if (left_.contains(x)) throw GeometryError("point lies in E_L");
  return meet(span(left_, x), right_).as_point();
}

Point EllipticSpace::project_rho_by_meet(const Point& x) const {
  if (right_.contains(x)) throw GeometryError("point lies in E_R");
  return meet(span(right_, x), left_).as_point();
}

bool EllipticSpace::harmonic_range_check(const Line& a) const {
  const Point x = a.klein_point();
  CrossRatio cr = cross_ratio(project_lambda(x), project_rho(x), x, polar(a).klein_point());
  return !cr.is_infinite() && *cr.value == -1;
}

}  // namespace klein3
