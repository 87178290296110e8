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

// Transformations of the line set: elliptic reflections, maps induced by
// collineations of PG(3), compositions, and finite perturbations of those.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klein3/clifford.hpp"
#include "klein3/klein.hpp"
#include "klein3/report.hpp"

namespace klein3 {

class LineMap {
 public:
  enum class Kind { Identity, Reflection, Collineation, Composite, Table };

  static LineMap identity();
  // Harmonic homology with centre q and axis q^pi.
  static LineMap reflection(const EllipticSpace& es, const Point& center);
  static LineMap collineation(Mat point_matrix, std::string label = "collineation");
  // Applies `first`, then `second`.
  static LineMap compose(const LineMap& first, const LineMap& second);
  // `base` with finitely many explicit values replaced.
  static LineMap table(LineMap base, std::vector<std::pair<Line, Line>> overrides);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  bool matrix_backed() const { return point_matrix_.has_value(); }
  // 4x4 matrix acting on points, and its second compound acting on Plücker
  // vectors. Present for matrix-backed maps only.
  const std::optional<Mat>& point_matrix() const { return point_matrix_; }
  const std::optional<Mat>& induced() const { return induced_; }
  // Every line whose image is set explicitly somewhere inside the map.
  std::vector<Line> override_keys() const;

  Line apply(const Line& a) const;
  // Throws GeometryError unless matrix-backed.
  LineMap inverse() const;

 private:
  LineMap() = default;

  Kind kind_ = Kind::Identity;
  std::string label_;
  std::optional<Mat> point_matrix_;
  std::optional<Mat> induced_;
  std::vector<LineMap> parts_;  // applied in order when not matrix-backed
  std::map<Line, Line> overrides_;
};

enum class ConditionMode { Iff, Forward };

// Samples line pairs, with a share forced into relation through
// related_chain(), and reports every pair violating
//   Forward: a ∼ b  =>  a^phi ∼ b^phi
//   Iff:     a ∼ b <=> a^phi ∼ b^phi.
// Pairs among the coordinate lines and around explicitly overridden lines are
// always checked first.
Report check_condition(const EllipticSpace& es, const LineMap& phi, ConditionMode mode,
                       std::size_t trials, std::uint64_t seed);

struct Classification {
  enum class Kind { Direct, Opposite, Neither };
  Kind kind = Kind::Neither;
  bool exact = false;             // decided from the induced matrix
  Kind sampled = Kind::Neither;   // what the sampled parallel pairs say
  std::vector<std::pair<Line, Line>> witness;
  std::string note;
};

const char* classification_name(Classification::Kind k);

Classification classify(const EllipticSpace& es, const LineMap& phi, std::size_t trials,
                        std::uint64_t seed);

// The two lines meeting both g and h orthogonally: (a', a'^pi) with
// a' = (g n h)^pi n (g v h).
std::pair<Line, Line> common_perpendicular(const EllipticSpace& es, const Line& g, const Line& h);

// Map of E_L (or E_R) induced by a direct line map: the projection of a onto
// the plane goes to the projection of a^phi.
class PlaneMap {
 public:
  static PlaneMap from_matrix(Side side, Mat m);
  // Point-by-point map, filled with record().
  static PlaneMap empty_table(Side side);

  Side side() const { return side_; }
  bool matrix_backed() const { return matrix_.has_value(); }
  // Acts on column coordinates in the rref basis of the plane.
  const std::optional<Mat>& matrix() const { return matrix_; }

  Vec apply_coords(const Vec& x) const;
  Point apply(const EllipticSpace& es, const Point& x) const;
  void record(const Point& x, const Point& image);
  PlaneMap inverse() const;

 private:
  Side side_ = Side::Left;
  std::optional<Mat> matrix_;
  std::map<Point, Point> table_;
};

// phi_L (side Left) or phi_R (side Right). Matrix-backed maps give the
// restriction of the induced matrix; other maps get a table filled from
// `trials` sampled lines. Throws GeometryError if phi is not direct or the
// sampled table is inconsistent.
PlaneMap induced_plane_map(const EllipticSpace& es, const LineMap& phi, Side side,
                           std::size_t trials = 0, std::uint64_t seed = 0);

// Lines with equal projection onto E_side must have images with equal
// projection.
Report check_plane_map_well_defined(const EllipticSpace& es, const LineMap& phi, Side side,
                                    std::size_t trials, std::uint64_t seed);

struct AdmissibilityReport {
  Report compatible;  // commuting with kappa_L, kappa_R (exact)
  Report secants;     // secants of Gamma between E_L and E_R stay secants (sampled)
  bool passed() const { return compatible.passed() && secants.passed(); }
};

AdmissibilityReport admissible_check(const EllipticSpace& es, const PlaneMap& zeta,
                                     const PlaneMap& eta, std::size_t trials, std::uint64_t seed);

// Does the line X v Y of PG(5) carry a rational point of the Klein quadric?
bool meets_quadric(const Point& x, const Point& y);

}  // namespace klein3
