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

// Seeded generation of small integer points and lines.

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "klein3/klein.hpp"

namespace klein3 {

class Sampler {
 public:
  // Independent streams for the same seed, e.g. one per trial index.
  explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0);

  int uniform(int lo, int hi);
  Vec integer_vector(std::size_t n, int lo = -9, int hi = 9);

  Point random_point();
  // Two random integer points, redrawn until independent.
  Line random_line();
  Point random_point_on(const Line& a);
  // A random point on the line through p and q other than p and q.
  Point random_point_between(const Point& p, const Point& q);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t stream_id(std::string_view name, std::uint64_t index = 0);

}  // namespace klein3
