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

// Small helpers shared by the unit tests.

#pragma once

#include <initializer_list>

#include "klein3/klein.hpp"

namespace klein3::testing {

inline Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Point p(std::initializer_list<long> xs) { return Point(v(xs)); }

inline Line pl(std::initializer_list<long> xs) { return Line::from_pluecker(v(xs)); }

inline Line through(std::initializer_list<long> x, std::initializer_list<long> y) {
  return Line::through(p(x), p(y));
}

// Basis point E_i of PG(3).
inline Point e(int i) {
  Vec x(4, Scalar(0));
  x[i] = 1;
  return Point(x);
}

}  // namespace klein3::testing
