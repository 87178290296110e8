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

// Orthogonality and Clifford parallelism of lines, spreads and reguli.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klein3/klein.hpp"
#include "klein3/report.hpp"
#include "klein3/sampling.hpp"

namespace klein3 {

// a ≈ b: a meets b and a meets the polar of b.
bool ortho_intersect(const EllipticSpace& es, const Line& a, const Line& b);
// The same relation decided through the projections: lambda-images
// kappa_R-conjugate and rho-images kappa_L-conjugate.
bool ortho_intersect_by_projections(const EllipticSpace& es, const Line& a, const Line& b);
// a ∼ b: a ≈ b or a = b.
bool related(const EllipticSpace& es, const Line& a, const Line& b);

bool left_parallel(const EllipticSpace& es, const Line& a, const Line& b);
bool right_parallel(const EllipticSpace& es, const Line& a, const Line& b);
bool parallel(const EllipticSpace& es, Side side, const Line& a, const Line& b);
bool clifford_parallel(const EllipticSpace& es, const Line& a, const Line& b);

// Number of rational points of the Klein quadric in a subspace of PG(5),
// i.e. the number of lines whose Klein images lie there.
struct TransversalCount {
  enum class Kind { Finite, Infinite, Inconclusive };
  Kind kind = Kind::Finite;
  int count = 0;            // for Finite
  std::vector<Line> lines;  // the lines themselves, for Finite
  int search_bound = 0;     // height bound used, for Inconclusive

  static TransversalCount finite(std::vector<Line> lines);
  static TransversalCount infinite() { return {Kind::Infinite, 0, {}, 0}; }
  static TransversalCount inconclusive(int bound) { return {Kind::Inconclusive, 0, {}, bound}; }

  bool is_infinite() const { return kind == Kind::Infinite; }
  bool is_conclusive() const { return kind != Kind::Inconclusive; }
  bool is_empty() const { return kind == Kind::Finite && count == 0; }
  std::string str() const;
};

inline constexpr int kDefaultSearchBound = 50;

TransversalCount quadric_points(const Subspace& w, int search_bound = kDefaultSearchBound);

// #{x : x ≈ a and x ≈ b}, decided from the Klein quadric restricted to the
// intersection of the kappa-polar hyperplanes of a, a^pi, b, b^pi.
TransversalCount transversal_count(const EllipticSpace& es, const Line& a, const Line& b,
                                   int search_bound = kDefaultSearchBound);

// S_L(a) or S_R(a): all lines parallel to `base` on the given side. Its Klein
// image is Gamma restricted to the 3-space carrier = E_side v base.
class Spread {
 public:
  Spread(const EllipticSpace& es, Line base, Side side);

  const Line& base() const { return base_; }
  Side side() const { return side_; }
  const Subspace& carrier() const { return carrier_; }

  bool contains(const EllipticSpace& es, const Line& x) const;
  // The unique member through q.
  Line line_through(const EllipticSpace& es, const Point& q) const;

 private:
  Line base_;
  Side side_;
  Subspace carrier_;
  Point key_;  // common projection of all members onto the opposite plane
};

// Klein image of the star of lines through a point: a plane on Gamma.
Subspace star(const Point& q);

// R_side(a|p): members of the spread meeting p, parametrized by points of p.
class Regulus {
 public:
  Regulus(const EllipticSpace& es, Spread spread, Line transversal);

  const Spread& spread() const { return spread_; }
  const Line& transversal() const { return transversal_; }

  Line member_at(const EllipticSpace& es, const Point& q) const;
  // Member through s*P0 + t*P1 where (P0, P1) = transversal().points().
  Line member(const EllipticSpace& es, const Scalar& s, const Scalar& t) const;
  bool contains(const EllipticSpace& es, const Line& x) const;

 private:
  Spread spread_;
  Line transversal_;
  Point p0_;
  Point p1_;
};

// Lines around `a` built from points A0 on a and A1 on a^pi:
//   A2 = A1^pi n a^pi, a1 = A0 v A1, a2 = A0 v A2,
// so that a ≈ a1 ≈ a2 ≈ a and a^pi ≈ a1, a2.
struct RelatedChain {
  Line a;
  Line a_polar;
  Line a1;
  Line a2;
};
RelatedChain related_chain(const EllipticSpace& es, const Line& a, Sampler& rng);

// A member of S_side(a) other than a and a^pi.
Line random_parallel(const EllipticSpace& es, const Line& a, Side side, Sampler& rng);

// Checks of the relations between spreads and reguli of two lines a ≈ b.
// Each throws GeometryError unless a ≈ b.
// Lines of S_side(a) and S_side(b) through a common point are ≈.
Report check_spread_pairing(const EllipticSpace& es, const Line& a, const Line& b, Side side,
                        std::size_t samples, std::uint64_t seed);
// x in S_side(a) has a ≈-partner in S_other(b) iff x meets b.
Report check_partners_meet_second(const EllipticSpace& es, const Line& a, const Line& b, Side side,
                        std::size_t samples, std::uint64_t seed);
// y in S_other(b) has a ≈-partner in S_side(a) iff y meets a.
Report check_partners_meet_first(const EllipticSpace& es, const Line& a, const Line& b, Side side,
                        std::size_t samples, std::uint64_t seed);
// Every member of R_side(a|b) is ≈ every member of R_other(b|a).
Report check_reguli_orthogonal(const EllipticSpace& es, const Line& a, const Line& b, Side side,
                        std::size_t samples, std::uint64_t seed);

struct ClassicalityReport {
  bool char_not_two = true;
  bool symmetric = false;
  bool invertible = false;
  bool anisotropic = false;
  std::optional<Scalar> alpha_square;  // sigma with A^2 = sigma I
  bool sigma_is_square = false;
  int plus_dim = 0;   // vector dimensions of the eigenspaces
  int minus_dim = 0;
  std::optional<std::pair<Line, Line>> witness;  // a ∥ b with b not in {a, a^pi}
  std::string reason;                            // empty when classical

  bool classical() const { return reason.empty(); }
  std::string str() const;
};

ClassicalityReport classicality_report(const Mat& form);

}  // namespace klein3
