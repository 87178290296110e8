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

#include "klein3/linalg.hpp"

#include <gtest/gtest.h>

#include "klein3/klein.hpp"
#include "test_util.hpp"

namespace klein3 {
namespace {

using testing::v;

TEST(Rref, IdentityIsFixed) {
  const auto r = rref(Mat::identity(3));
  EXPECT_EQ(r.reduced, Mat::identity(3));
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, DependentRows) {
  const auto r = rref(Mat{{1, 2}, {2, 4}});
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.reduced, (Mat{{1, 2}}));
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Rref, PlueckerVectorsOfFourLines) {
  // E0vE1, E0vE2, E0vE3, E1vE2 are four distinct unit vectors.
  const Mat m = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}};
  EXPECT_EQ(rank(m), 4u);
}

TEST(Kernel, ZeroMatrix) { EXPECT_EQ(kernel(Mat(2, 3)).rows(), 3u); }

TEST(Kernel, SingleEquation) {
  const Mat k = kernel(Mat{{1, 0, 0, 0}});
  EXPECT_EQ(k.rows(), 3u);
  EXPECT_EQ(k.row(0), v({0, 1, 0, 0}));
}

TEST(Kernel, TransversalConditionsOfTwoCoordinateLines) {
  // Hyperplanes B(a, .) = B(a^pi, .) = B(b, .) = B(b^pi, .) = 0 for
  // a = (1,0,0,0,0,0), b = (0,1,0,0,0,0) under the standard form.
  const Mat g = klein_gram();
  Mat eqs(0, 6);
  for (const Vec& x : {v({1, 0, 0, 0, 0, 0}), v({0, 0, 0, 1, 0, 0}), v({0, 1, 0, 0, 0, 0}),
                       v({0, 0, 0, 0, 1, 0})})
    eqs.append_row(g * x);
  const Mat k = kernel(eqs);
  ASSERT_EQ(k.rows(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    const Vec x = k.row(i);
    EXPECT_EQ(x[0], 0);
    EXPECT_EQ(x[1], 0);
    EXPECT_EQ(x[3], 0);
    EXPECT_EQ(x[4], 0);
  }
}

TEST(Scalars, SquareRoots) {
  EXPECT_EQ(square_root(Scalar(4, 9)), Scalar(2, 3));
  EXPECT_FALSE(is_square(2));
  EXPECT_FALSE(is_square(-1));
  EXPECT_TRUE(is_square(0));
}

TEST(Scalars, Sign) {
  EXPECT_EQ(sign(0), 0);
  EXPECT_EQ(sign(Scalar(-3, 7)), -1);
  EXPECT_EQ(sign(5), 1);
}

TEST(Scalars, Parse) {
  EXPECT_EQ(parse_scalar("-3/6"), Scalar(-1, 2));
  EXPECT_EQ(parse_scalar("7"), 7);
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("x"), std::invalid_argument);
  EXPECT_THROW(parse_scalar(""), std::invalid_argument);
}

TEST(Inverse, RoundTrip) {
  const Mat m = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  const auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Mat::identity(3));
  EXPECT_FALSE(inverse(Mat{{1, 2}, {2, 4}}));
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(Mat{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(Mat{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
}

TEST(Diagonalize, CongruenceHolds) {
  for (const Mat& s : {Mat{{0, 1}, {1, 0}}, Mat{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}},
                       Mat{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, Mat{{0, 0}, {0, 0}}}) {
    const auto d = diagonalize_symmetric(s);
    EXPECT_EQ(d.transform.transposed() * s * d.transform, Mat::diagonal(d.diagonal));
    EXPECT_NE(determinant(d.transform), 0);
  }
}

TEST(Definite, Signs) {
  EXPECT_EQ(definite_sign(Mat::identity(3)), 1);
  EXPECT_EQ(definite_sign(Mat{{-1, 0}, {0, -2}}), -1);
  EXPECT_EQ(definite_sign(Mat{{1, 0}, {0, -1}}), 0);
  EXPECT_EQ(definite_sign(Mat{{1, 0}, {0, 0}}), 0);
  EXPECT_EQ(definite_sign(Mat{{0, 1}, {1, 0}}), 0);
}

TEST(Mat, Proportional) {
  EXPECT_TRUE((Mat{{2, 0}, {0, 2}}).proportional_to(Mat::identity(2)));
  EXPECT_TRUE((Mat{{-1, 0}, {0, -1}}).proportional_to(Mat::identity(2)));
  EXPECT_FALSE((Mat{{1, 0}, {0, 2}}).proportional_to(Mat::identity(2)));
  EXPECT_FALSE(Mat(2, 2).proportional_to(Mat::identity(2)));
}

}  // namespace
}  // namespace klein3
