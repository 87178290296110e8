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

#include "klein3/isotropy.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace klein3 {
namespace {

using testing::v;

// Nonzero integer zero of a x^2 + b y^2 + c z^2 with |x|,|y|,|z| <= h.
bool brute_force_zero(long a, long b, long c, long h) {
  for (long x = 0; x <= h; ++x)
    for (long y = -h; y <= h; ++y)
      for (long z = -h; z <= h; ++z)
        if ((x || y || z) && a * x * x + b * y * y + c * z * z == 0) return true;
  return false;
}

TEST(Hilbert, KnownSymbols) {
  EXPECT_EQ(hilbert_symbol(-1, -1, 2), -1);
  EXPECT_EQ(hilbert_symbol(2, 2, 2), 1);
  EXPECT_EQ(hilbert_symbol(2, 3, 3), -1);
  EXPECT_EQ(hilbert_symbol(-1, 3, 3), -1);
  EXPECT_EQ(hilbert_symbol(-1, 5, 5), 1);
  EXPECT_EQ(hilbert_symbol(3, 5, 7), 1);
}

TEST(Hilbert, ProductFormula) {
  // Product over all places is 1; the real symbol is -1 iff both negative.
  for (long a : {-15, -6, -3, -1, 2, 5, 6, 10, 21}) {
    for (long b : {-35, -7, -2, 3, 11, 14, 30}) {
      int prod = a < 0 && b < 0 ? -1 : 1;
      for (long p : {2, 3, 5, 7, 11, 13}) prod *= hilbert_symbol(a, b, p);
      EXPECT_EQ(prod, 1) << a << " " << b;
    }
  }
}

TEST(Isotropy, Examples) {
  EXPECT_EQ(is_isotropic(v({1, 1, -2})), true);
  EXPECT_EQ(is_isotropic(v({1, 1, -3})), false);
  EXPECT_EQ(is_isotropic(v({2, 3, -5})), true);
  EXPECT_EQ(is_isotropic(v({1, 1, 1})), false);
  EXPECT_EQ(is_isotropic(v({1, 1, 1, -7})), false);
  EXPECT_EQ(is_isotropic(v({1, 1, 1, -1})), true);
  EXPECT_EQ(is_isotropic(v({1, 1, 1, 1, -7})), true);
  EXPECT_EQ(is_isotropic(v({1, -4})), true);
  EXPECT_EQ(is_isotropic(v({1, -2})), false);
}

TEST(Isotropy, TernaryMatchesBruteForce) {
  // Small solutions exist whenever any exist (|z| <= sqrt|ab| and so on).
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long c = -6; c <= 6; ++c) {
        if (!a || !b || !c) continue;
        const auto iso = is_isotropic(v({a, b, c}));
        ASSERT_TRUE(iso);
        EXPECT_EQ(*iso, brute_force_zero(a, b, c, 7)) << a << " " << b << " " << c;
      }
}

TEST(Isotropy, RationalCoefficients) {
  // Scaling by squares does not change the answer.
  Vec d = {Scalar(1, 4), Scalar(9, 1), Scalar(-2, 25)};
  EXPECT_EQ(is_isotropic(d), is_isotropic(v({1, 1, -2})));
  d = {Scalar(3, 2), Scalar(1, 6), Scalar(-1, 1)};  // square classes 6, 6, -1
  EXPECT_EQ(is_isotropic(d), is_isotropic(v({6, 6, -1})));
}

TEST(Factoring, Examples) {
  EXPECT_EQ(prime_factors(360), (std::vector<mpz_class>{2, 3, 5}));
  const mpz_class big = mpz_class("1000000007") * mpz_class("998244353") * 4;
  EXPECT_EQ(prime_factors(big), (std::vector<mpz_class>{2, mpz_class("998244353"), mpz_class("1000000007")}));
}

}  // namespace
}  // namespace klein3
