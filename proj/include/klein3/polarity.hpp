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

#pragma once

#include "klein3/linalg.hpp"
#include "klein3/projective.hpp"

namespace klein3 {

// Sufficient test for anisotropy over the rationals: the form is definite
// (up to overall sign) after rational diagonalization.
bool certify_anisotropic(const Mat& form);

// The absolute polarity of PG(3,F) given by a symmetric invertible 4x4 form.
// Construction only checks symmetry and invertibility; EllipticSpace requires
// the anisotropy certificate on top.
class Polarity {
 public:
  explicit Polarity(Mat form);
  static Polarity standard() { return Polarity(Mat::identity(4)); }

  const Mat& form() const { return form_; }

  // x^T M y
  Scalar value(const Vec& x, const Vec& y) const { return bilinear(x, form_, y); }
  bool conjugate(const Point& x, const Point& y) const;

  // Points conjugate to every point of s.
  Subspace polar(const Subspace& s) const;
  // The polar hyperplane of a point, as hyperplane coefficients.
  Vec polar_coefficients(const Point& p) const { return form_ * p.coords(); }

 private:
  Mat form_;
};

}  // namespace klein3
