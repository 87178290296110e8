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

#include "klein3/polarity.hpp"

namespace klein3 {

bool certify_anisotropic(const Mat& form) {
  if (!form.is_symmetric() || sgn(determinant(form)) == 0) return false;
  const Vec d = diagonalize_symmetric(form).diagonal;
  const int s = sgn(d.front());
  for (const auto& x : d)
    if (sgn(x) != s || s == 0) return false;
  return true;
}

Polarity::Polarity(Mat form) : form_(std::move(form)) {
  if (form_.rows() != 4 || form_.cols() != 4) throw GeometryError("polarity form must be 4x4");
  if (!form_.is_symmetric()) throw GeometryError("polarity form is not symmetric");
  if (sgn(determinant(form_)) == 0) throw GeometryError("polarity form is singular");
}

bool Polarity::conjugate(const Point& x, const Point& y) const {
  return sgn(value(x.coords(), y.coords())) == 0;
}

Subspace Polarity::polar(const Subspace& s) const {
  if (s.ambient_dim() != 3) throw GeometryError("polar: expected a subspace of PG(3)");
  if (s.is_empty()) return Subspace::whole(3);
  return Subspace::solutions(3, s.basis() * form_);
}

}  // namespace klein3
