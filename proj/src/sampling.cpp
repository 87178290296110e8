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

#include "klein3/sampling.hpp"

namespace klein3 {

namespace {

std::seed_seq make_seed(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream),
                       static_cast<std::uint32_t>(stream >> 32)};
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
  auto seq = make_seed(seed, stream);
  engine_.seed(seq);
}

int Sampler::uniform(int lo, int hi) {
  // Plain modular reduction keeps the stream identical across standard
  // library implementations.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Vec Sampler::integer_vector(std::size_t n, int lo, int hi) {
  Vec v(n);
  for (auto& x : v) x = uniform(lo, hi);
  return v;
}

Point Sampler::random_point() {
  for (;;) {
    Vec v = integer_vector(4);
    if (!is_zero(v)) return Point(std::move(v));
  }
}

Line Sampler::random_line() {
  for (;;) {
    Vec x = integer_vector(4);
    Vec y = integer_vector(4);
    if (is_zero(wedge(x, y))) continue;
    return Line::through(Point(x), Point(y));
  }
}

Point Sampler::random_point_on(const Line& a) {
  auto [p, q] = a.points();
  for (;;) {
    Scalar s = uniform(-9, 9);
    Scalar t = uniform(-9, 9);
    if (sgn(s) == 0 && sgn(t) == 0) continue;
    return Point(s * p.coords() + t * q.coords());
  }
}

Point Sampler::random_point_between(const Point& p, const Point& q) {
  for (;;) {
    Scalar s = uniform(-9, 9);
    Scalar t = uniform(-9, 9);
    if (sgn(s) == 0 || sgn(t) == 0) continue;
    Vec v = s * p.coords() + t * q.coords();
    if (is_zero(v)) continue;
    return Point(std::move(v));
  }
}

std::uint64_t stream_id(std::string_view name, std::uint64_t index) {
  // FNV-1a over the name, then mixed with the index.
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace klein3
