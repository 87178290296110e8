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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace klein3 {
namespace {

using testing::e;
using testing::p;
using testing::v;

TEST(Polar, PointToPlane) {
  const auto pi = Polarity::standard();
  EXPECT_EQ(pi.polar(Subspace::of(e(0))), Subspace::hyperplane(v({1, 0, 0, 0})));
}

TEST(Polar, LineToLine) {
  const auto pi = Polarity::standard();
  EXPECT_EQ(pi.polar(span(e(0), e(1))), span(e(2), e(3)));
}

TEST(Polar, PlaneToPoint) {
  const auto pi = Polarity::standard();
  EXPECT_EQ(pi.polar(Subspace::hyperplane(v({0, 0, 0, 1}))), Subspace::of(e(3)));
}

TEST(Polar, Involution) {
  const Polarity pi(Mat{{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 3, 1}, {0, 0, 1, 1}});
  const Subspace l = span(p({1, 2, 3, 4}), p({0, 1, 0, -1}));
  EXPECT_EQ(pi.polar(pi.polar(l)), l);
}

TEST(Conjugate, Examples) {
  const auto pi = Polarity::standard();
  EXPECT_TRUE(pi.conjugate(e(0), e(1)));
  EXPECT_FALSE(pi.conjugate(e(0), e(0)));
  EXPECT_TRUE(pi.conjugate(p({1, 1, 0, 0}), p({1, -1, 0, 0})));
}

TEST(Anisotropic, Forms) {
  EXPECT_TRUE(certify_anisotropic(Mat::identity(4)));
  EXPECT_FALSE(certify_anisotropic(Mat::diagonal(v({1, 1, 1, -1}))));
  EXPECT_TRUE(certify_anisotropic(Mat::diagonal(v({1, 2, 3, 5}))));
  EXPECT_FALSE(certify_anisotropic(Mat{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST(Polarity, RejectsBadForms) {
  EXPECT_THROW(Polarity(Mat{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), GeometryError);
  EXPECT_THROW(Polarity(Mat::diagonal(v({1, 1, 1, 0}))), GeometryError);
  EXPECT_THROW(Polarity(Mat::identity(3)), GeometryError);
}

}  // namespace
}  // namespace klein3
