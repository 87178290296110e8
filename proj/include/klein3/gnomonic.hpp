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

// Gnomonic projection of a spread quadric onto E_L, the conic k of a regulus,
// and the quadrangle configuration used to show that phi_L is injective.

#pragma once

#include <functional>

#include "klein3/clifford.hpp"
#include "klein3/linemaps.hpp"

namespace klein3 {

// Conic in a plane of PG(5), in coordinates of the plane's rref basis.
struct Conic {
  Subspace plane = Subspace::empty(5);
  Mat form;  // symmetric 3x3
  // Plane coordinates of the point with parameter (s:t); empty if unknown.
  std::function<Vec(const Scalar&, const Scalar&)> param;

  Scalar value(const Vec& x) const { return bilinear(x, form, x); }
  Scalar polar_value(const Vec& x, const Vec& y) const { return bilinear(x, form, y); }
  bool contains(const Vec& x) const { return sgn(value(x)) == 0; }
};

// Centre of the gnomonic projection of a spread: the opposite plane meets the
// carrier in a single point.
Point gnomonic_center(const EllipticSpace& es, const Spread& sp);

// Projects X (on the spread quadric) from the centre onto E_side.
Point gnomonic_project(const EllipticSpace& es, const Spread& sp, const Point& x);

// k: image of the regulus R_L(a|t) under the gnomonic projection of S_L(a).
// Requires t to meet a, a and t unrelated, and t to miss a^pi.
Conic conic_k(const EllipticSpace& es, const Line& a, const Line& t);

// Every real line through u is a secant. Throws GeometryError if u lies on the
// conic or the conic is degenerate or has no real points.
bool interior_point(const Conic& c, const Vec& u);

// Second point of k on the line through x (on k) and u; returns x itself when
// the line is tangent.
Vec second_intersection(const Conic& c, const Vec& x, const Vec& u);

// The full quadrangle construction for a direct matrix-backed phi, checked on
// `samples` seeded choices of X on k.
Report quadrangle_configuration(const EllipticSpace& es, const Line& a, const Line& t,
                           const LineMap& phi, std::size_t samples, std::uint64_t seed);

// A line t through a point of a, unrelated to a and skew to a^pi.
Line quadrangle_partner(const EllipticSpace& es, const Line& a, Sampler& rng);

}  // namespace klein3
