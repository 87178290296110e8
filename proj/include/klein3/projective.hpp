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

// Projective points and subspaces in homogeneous coordinates.
//
// The geometry only needs PG(3,F) and PG(5,F), but the machinery is the same
// for any ambient dimension and lower dimensions show up as coordinate planes
// and lines (e.g. points of E_L in their 3-coordinate basis).

#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "klein3/linalg.hpp"

namespace klein3 {

// Rescales so the first nonzero entry is 1. Throws on the zero vector.
Vec normalized(Vec v);

class Point {
 public:
  explicit Point(Vec coords);
  Point(std::initializer_list<Scalar> coords) : Point(Vec(coords)) {}

  const Vec& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  int ambient_dim() const { return static_cast<int>(coords_.size()) - 1; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  std::string str() const { return to_string(coords_); }

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  Vec coords_;
};

// A projective subspace held as the reduced row-echelon basis of its
// underlying vector space. Equal subspaces have identical bases.
class Subspace {
 public:
  static Subspace empty(int ambient_dim);
  static Subspace whole(int ambient_dim);
  static Subspace from_rows(int ambient_dim, const Mat& rows);
  static Subspace of(const Point& p);
  // {x : coeffs . x = 0}
  static Subspace hyperplane(const Vec& coeffs);
  // {x : rows(eqs) . x = 0}
  static Subspace solutions(int ambient_dim, const Mat& eqs);

  int ambient_dim() const { return ambient_; }
  // Projective dimension; -1 for the empty subspace.
  int dim() const { return static_cast<int>(basis_.rows()) - 1; }
  bool is_empty() const { return basis_.rows() == 0; }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Rows spanning the annihilator; a point lies in the subspace iff every
  // row vanishes on it.
  Mat equations() const;

  bool contains(const Point& p) const;
  bool contains(const Subspace& s) const;

  // Coordinates of a point of this subspace with respect to basis().
  Vec coordinates_of(const Point& p) const;
  Point point_at(const Vec& coords) const;

  // The unique point of a 0-dimensional subspace.
  Point as_point() const;

  std::string str() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(int ambient, Mat basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  int ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace span(const Subspace& s, const Subspace& t);
Subspace span(const std::vector<Subspace>& parts);
Subspace span(const Point& p, const Point& q);
Subspace span(const Subspace& s, const Point& p);
Subspace meet(const Subspace& s, const Subspace& t);
bool incident(const Point& p, const Subspace& s);

// (A,B;C,D) = [AC][BD] / ([BC][AD]) with brackets taken in any basis of the
// common line. nullopt encodes the value infinity (D = A).
struct CrossRatio {
  std::optional<Scalar> value;
  bool is_infinite() const { return !value.has_value(); }
};

CrossRatio cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d);
Point harmonic_conjugate(const Point& a, const Point& b, const Point& c);

}  // namespace klein3
