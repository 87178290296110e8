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

// Klein correspondence between lines of PG(3,F) and points of the Klein
// quadric in PG(5,F), and the structure an elliptic polarity induces there.
//
// Plücker coordinates are ordered (p01, p02, p03, p23, p31, p12) with
// p_ij = x_i y_j - x_j y_i. In this order the quadric is
//   Omega(p) = p01 p23 + p02 p31 + p03 p12
// and the polarity of the standard form acts as the swap of the two triples.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "klein3/linalg.hpp"
#include "klein3/polarity.hpp"
#include "klein3/projective.hpp"

namespace klein3 {

enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline const char* side_name(Side s) { return s == Side::Left ? "L" : "R"; }

// Index pairs (i, j) of the six Plücker coordinates, in storage order.
inline constexpr std::array<std::pair<int, int>, 6> kPlueckerPairs{
    {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};

Vec wedge(const Vec& x, const Vec& y);
Scalar omega(const Vec& p);
// B(p,q) = p01 q23 + p23 q01 + p02 q31 + p31 q02 + p03 q12 + p12 q03,
// so B(p,p) = 2 Omega(p).
Scalar omega_bilinear(const Vec& p, const Vec& q);
// Gram matrix of B.
const Mat& klein_gram();

// Action of a point collineation of PG(3) on Plücker vectors.
Mat second_compound(const Mat& m);
// Swaps (p01,p02,p03) with (p23,p31,p12).
const Mat& swap_matrix();

// A line of PG(3,F), carried as its normalized Plücker vector.
class Line {
 public:
  static Line through(const Point& x, const Point& y);
  // Throws GeometryError unless p is a nonzero point of the Klein quadric.
  static Line from_pluecker(Vec p);

  const Vec& pluecker() const { return p_; }
  Point klein_point() const { return Point(p_); }
  // Two distinct points spanning the line.
  std::pair<Point, Point> points() const;
  Subspace subspace() const;
  bool contains(const Point& x) const;

  std::string str() const { return to_string(p_); }

  friend bool operator==(const Line&, const Line&) = default;
  friend bool operator<(const Line& a, const Line& b) { return a.p_ < b.p_; }

 private:
  explicit Line(Vec p) : p_(std::move(p)) {}
  Vec p_;
};

inline Line klein_map(const Point& x, const Point& y) { return Line::through(x, y); }
inline std::pair<Point, Point> klein_inverse(const Line& a) { return a.points(); }

// Two lines meet iff their Klein images are conjugate under B.
bool lines_meet(const Line& a, const Line& b);
// The common point of two distinct intersecting lines.
Point intersection_point(const Line& a, const Line& b);

class NotClassical : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// D * second_compound(M), scaled so that its square is the identity. Throws
// NotClassical when A^2 is not sigma*I with sigma a square in F.
Mat alpha_matrix(const Polarity& pi);

struct InvariantPlanes {
  Subspace left;   // +1 eigenspace
  Subspace right;  // -1 eigenspace
};

// Throws NotClassical unless both eigenspaces of the normalized alpha are
// planes, skew, kappa-polar to each other, and disjoint from the quadric.
InvariantPlanes invariant_planes(const Mat& alpha);

class EllipticSpace {
 public:
  // Throws GeometryError if the form is not certified anisotropic and
  // NotClassical if the invariant planes are not rational.
  explicit EllipticSpace(Polarity pi);
  static EllipticSpace standard() { return EllipticSpace(Polarity::standard()); }

  // Test hook: replaces the invariant planes without re-deriving them. The
  // planes must still be complementary so that the projections exist.
  static EllipticSpace with_planes_for_testing(Polarity pi, Subspace left, Subspace right);

  const Polarity& pi() const { return pi_; }
  const Mat& alpha() const { return alpha_; }
  const Subspace& plane(Side s) const { return s == Side::Left ? left_ : right_; }
  const Subspace& left_plane() const { return left_; }
  const Subspace& right_plane() const { return right_; }
  // Gram matrix of B on the rref basis rows of E_L / E_R.
  const Mat& kappa(Side s) const { return s == Side::Left ? kappa_left_ : kappa_right_; }

  Line polar(const Line& a) const;

  // lambda: X -> (X v E_L) n E_R and rho: X -> (X v E_R) n E_L.
  Point project_lambda(const Point& x) const;
  Point project_rho(const Point& x) const;
  // Projection onto plane(s) from the complementary plane.
  Point project_onto(Side s, const Point& x) const;
  // Same maps evaluated literally as join and meet of subspaces.
  Point project_lambda_by_meet(const Point& x) const;
  Point project_rho_by_meet(const Point& x) const;

  // Coordinates of a point of E_L / E_R in the rref basis, and back.
  Vec plane_coords(Side s, const Point& x) const { return plane(s).coordinates_of(x); }
  Point plane_point(Side s, const Vec& c) const { return plane(s).point_at(c); }

  // (a^{gamma lambda}, a^{gamma rho}; a^gamma, a^{pi gamma}) == -1
  bool harmonic_range_check(const Line& a) const;

 private:
  EllipticSpace(Polarity pi, Mat alpha, Subspace left, Subspace right);

  Polarity pi_;
  Mat alpha_;
  Subspace left_;
  Subspace right_;
  Mat kappa_left_;
  Mat kappa_right_;
  Mat to_left_;   // projector onto E_L along E_R
  Mat to_right_;  // projector onto E_R along E_L
};

// Restriction of B to the basis rows of a subspace of PG(5).
Mat restricted_klein_form(const Subspace& s);

}  // namespace klein3
