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

#include "klein3/io.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace klein3 {
namespace {

using testing::pl;

TEST(ParseScalar, IntegersAndFractions) {
  EXPECT_EQ(parse_scalar("-3"), Scalar(-3));
  EXPECT_EQ(parse_scalar("+7"), Scalar(7));
  EXPECT_EQ(parse_scalar("4/6"), Scalar(2, 3));
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_scalar(""), std::invalid_argument);
}

TEST(ParseLineSpec, TwoPoints) {
  EXPECT_EQ(parse_line_spec("1 0 0 0;0 1 0 0"), pl({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(parse_line_spec(" 1 0 0 0 ; 0 0 1/2 0 "), pl({0, 1, 0, 0, 0, 0}));
}

TEST(ParseLineSpec, Sextuple) {
  EXPECT_EQ(parse_line_spec("2 0 0 0 0 0"), pl({1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(parse_line_spec("1 0 2 2 0 -1"), pl({1, 0, 2, 2, 0, -1}));
}

TEST(ParseLineSpec, ErrorsCarryPosition) {
  try {
    parse_line_spec("1 0 0 0;0 1 x 0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 13u);
  }
  try {
    parse_line_spec("1 0 0 1 0 0");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("Omega"), std::string::npos);
  }
  EXPECT_THROW(parse_line_spec("1 0 0 0;1 0 0 0"), ParseError);
  EXPECT_THROW(parse_line_spec("1 0 0;0 1 0 0"), ParseError);
  EXPECT_THROW(parse_line_spec("1 0 0 0;0 1 0 0;1 1 1 1"), ParseError);
  EXPECT_THROW(parse_line_spec("1 0 0 0 0"), ParseError);
  EXPECT_THROW(parse_line_spec("0 0 0 0 0 0"), ParseError);
  EXPECT_THROW(parse_line_spec(""), ParseError);
}

TEST(ParsePoint, FourCoordinates) {
  EXPECT_EQ(parse_point("0 2 0 0"), Point({0, 1, 0, 0}));
  EXPECT_THROW(parse_point("1 2 3"), ParseError);
  EXPECT_THROW(parse_point("0 0 0 0"), ParseError);
}

TEST(ParseForm, ReadsSymmetricMatrix) {
  const Mat m = parse_form("4\n2 1 0 0\n1 2 0 0\n0 0 2 1\n0 0 1 2\n");
  EXPECT_EQ(m, (Mat{{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}}));
  EXPECT_EQ(parse_form("4\n1 0 0 0\n0 1/2 0 0\n0 0 1 0\n0 0 0 1")(1, 1), Scalar(1, 2));
}

TEST(ParseForm, Rejections) {
  try {
    parse_form("4\n1 2 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_form("3\n1 0 0\n0 1 0\n0 0 1\n"), ParseError);
  EXPECT_THROW(parse_form("4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n"), ParseError);
  EXPECT_THROW(parse_form("4\n1 0 0 0\n0 1 0\n0 0 1 0\n0 0 0 1\n"), ParseError);
  EXPECT_THROW(parse_form("4\n1 0 0 0\n0 1 0 0\n0 0 y 0\n0 0 0 1\n"), ParseError);
  EXPECT_THROW(parse_form(""), ParseError);
  EXPECT_NO_THROW(parse_matrix("4\n1 2 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"));
}

}  // namespace
}  // namespace klein3
