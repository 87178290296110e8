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

#include "klein3/linemaps.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace klein3 {
namespace {

using testing::e;
using testing::p;
using testing::pl;
using testing::through;
using testing::v;

using K = Classification::Kind;

const Line kA = pl({1, 0, 0, 0, 0, 0});
const Line kB = pl({0, 1, 0, 0, 0, 0});
const Line kFar = pl({1, 0, 2, 2, 0, -1});

EllipticSpace skewed() {
  return EllipticSpace(Polarity(Mat{{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}}));
}

LineMap swapped_table() { return LineMap::table(LineMap::identity(), {{kB, kFar}, {kFar, kB}}); }

LineMap e0_then_e1(const EllipticSpace& es) {
  return LineMap::compose(LineMap::reflection(es, e(0)), LineMap::reflection(es, e(1)));
}

TEST(Reflection, AtE0) {
  const auto es = EllipticSpace::standard();
  const LineMap r = LineMap::reflection(es, e(0));
  EXPECT_EQ(*r.point_matrix(), Mat::diagonal(v({-1, 1, 1, 1})));
  EXPECT_EQ(*r.induced(), Mat::diagonal(v({-1, -1, -1, 1, 1, 1})));
  EXPECT_EQ(r.apply(kA), kA);
  EXPECT_EQ(r.apply(kB), kB);
  EXPECT_EQ(r.kind(), LineMap::Kind::Reflection);
}

TEST(Reflection, FixesCentreAndAxis) {
  const auto es = skewed();
  Sampler rng(3);
  const Point q = rng.random_point();
  const Mat h = *LineMap::reflection(es, q).point_matrix();
  EXPECT_EQ(Point(h * q.coords()), q);
  const Subspace axis = es.pi().polar(Subspace::of(q));
  for (std::size_t i = 0; i < 3; ++i) {
    const Vec x = axis.basis().row(i);
    EXPECT_EQ(Point(h * x), Point(x));
  }
  EXPECT_TRUE((h.transposed() * es.pi().form() * h).proportional_to(es.pi().form()));
}

TEST(Reflection, Involution) {
  const auto es = skewed();
  Sampler rng(5);
  const LineMap r = LineMap::reflection(es, rng.random_point());
  const LineMap rr = LineMap::compose(r, r);
  for (int i = 0; i < 100; ++i) {
    const Line a = rng.random_line();
    EXPECT_EQ(rr.apply(a), a);
  }
}

TEST(Apply, Examples) {
  const auto es = EllipticSpace::standard();
  EXPECT_EQ(LineMap::identity().apply(kA), kA);
  EXPECT_EQ(*LineMap::reflection(es, e(0)).induced() * kB.pluecker(), v({0, -1, 0, 0, 0, 0}));
  const LineMap c = e0_then_e1(es);
  EXPECT_EQ(c.apply(pl({0, 0, 1, 0, 0, 0})), pl({0, 0, 1, 0, 0, 0}));
  EXPECT_EQ(*c.induced(), Mat::diagonal(v({1, -1, -1, 1, -1, -1})));
}

TEST(Apply, InducedMatchesPointImages) {
  const auto es = skewed();
  Sampler rng(7);
  const LineMap c = LineMap::compose(LineMap::reflection(es, rng.random_point()),
                                     LineMap::reflection(es, rng.random_point()));
  for (int i = 0; i < 50; ++i) {
    const Line a = rng.random_line();
    auto [x, y] = a.points();
    const Mat& m = *c.point_matrix();
    EXPECT_EQ(c.apply(a), Line::through(Point(m * x.coords()), Point(m * y.coords())));
  }
}

TEST(Table, OverridesOnly) {
  const LineMap t = swapped_table();
  EXPECT_EQ(t.apply(kB), kFar);
  EXPECT_EQ(t.apply(kFar), kB);
  EXPECT_EQ(t.apply(kA), kA);
  EXPECT_FALSE(t.matrix_backed());
  EXPECT_EQ(t.override_keys().size(), 2u);
  EXPECT_THROW(t.inverse(), GeometryError);
}

TEST(Condition, ReflectionSatisfiesIff) {
  const auto es = EllipticSpace::standard();
  const Report r = check_condition(es, LineMap::reflection(es, e(0)), ConditionMode::Iff, 1000, 1);
  EXPECT_TRUE(r.passed()) << to_text(r);
  EXPECT_GE(r.trials, 1000u);
}

TEST(Condition, IdentitySatisfiesIff) {
  const auto es = skewed();
  EXPECT_TRUE(check_condition(es, LineMap::identity(), ConditionMode::Iff, 200, 2).passed());
}

TEST(Condition, TableIsCaught) {
  const auto es = EllipticSpace::standard();
  // The replacement line is skew to a and to a^pi.
  EXPECT_FALSE(lines_meet(kFar, kA));
  EXPECT_FALSE(lines_meet(kFar, es.polar(kA)));
  const Report r = check_condition(es, swapped_table(), ConditionMode::Forward, 100, 1);
  ASSERT_FALSE(r.passed());
  const Violation& first = r.violations.front();
  EXPECT_EQ(first.trial, 0u);
  EXPECT_NE(first.witness.find("a=(1,0,0,0,0,0) b=(0,1,0,0,0,0)"), std::string::npos) << first.witness;
  EXPECT_EQ(first.expected, "images related");
}

TEST(Condition, NonIsometryIsCaught) {
  const auto es = EllipticSpace::standard();
  const LineMap m = LineMap::collineation(Mat::diagonal(v({1, 1, 1, 2})));
  EXPECT_FALSE(check_condition(es, m, ConditionMode::Forward, 50, 1).passed());
  EXPECT_EQ(classify(es, m, 50, 1).kind, K::Neither);
}

TEST(Classify, Examples) {
  const auto es = EllipticSpace::standard();
  const auto opp = classify(es, LineMap::reflection(es, e(0)), 50, 1);
  EXPECT_EQ(opp.kind, K::Opposite);
  EXPECT_TRUE(opp.exact);
  EXPECT_EQ(opp.sampled, K::Opposite);
  const auto dir = classify(es, e0_then_e1(es), 50, 1);
  EXPECT_EQ(dir.kind, K::Direct);
  EXPECT_EQ(dir.sampled, K::Direct);
  EXPECT_EQ(classify(es, LineMap::identity(), 50, 1).kind, K::Direct);
  const auto table = classify(es, swapped_table(), 50, 1);
  EXPECT_EQ(table.kind, K::Neither);
  EXPECT_FALSE(table.note.empty());
}

TEST(Classify, CompositionAlgebra) {
  const auto es = skewed();
  Sampler rng(11);
  const LineMap r1 = LineMap::reflection(es, rng.random_point());
  const LineMap r2 = LineMap::reflection(es, rng.random_point());
  const LineMap r3 = LineMap::reflection(es, rng.random_point());
  const LineMap d = LineMap::compose(r1, r2);
  EXPECT_EQ(classify(es, r1, 30, 1).kind, K::Opposite);
  EXPECT_EQ(classify(es, d, 30, 1).kind, K::Direct);
  EXPECT_EQ(classify(es, LineMap::compose(d, r3), 30, 1).kind, K::Opposite);
  EXPECT_EQ(classify(es, LineMap::compose(r3, d), 30, 1).kind, K::Opposite);
  EXPECT_EQ(classify(es, LineMap::compose(LineMap::compose(r1, r2), LineMap::compose(r3, r1)), 30, 1).kind,
            K::Direct);
}

TEST(Classify, SampledRouteWithoutMatrix) {
  const auto es = EllipticSpace::standard();
  // A table with no overrides is not matrix-backed, so only samples decide.
  const LineMap wrapped = LineMap::table(LineMap::reflection(es, e(0)), {});
  const auto c = classify(es, wrapped, 40, 1);
  EXPECT_FALSE(c.exact);
  EXPECT_EQ(c.kind, K::Opposite);
}

TEST(PolarCommutes, MatrixBackedMaps) {
  const auto es = skewed();
  Sampler rng(13);
  const LineMap c = LineMap::compose(LineMap::reflection(es, rng.random_point()),
                                     LineMap::reflection(es, rng.random_point()));
  for (int i = 0; i < 1000; ++i) {
    const Line a = rng.random_line();
    EXPECT_EQ(c.apply(es.polar(a)), es.polar(c.apply(a)));
  }
}

TEST(CommonPerpendicular, Example) {
  const auto es = EllipticSpace::standard();
  const Line g = through({1, 0, 0, 0}, {0, 1, 0, 0});
  const Line h = through({1, 0, 0, 0}, {0, 0, 1, 0});
  const auto [a1, a2] = common_perpendicular(es, g, h);
  EXPECT_EQ(a1, pl({0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(a2, pl({0, 0, 1, 0, 0, 0}));
  for (const Line& x : {a1, a2}) {
    EXPECT_TRUE(ortho_intersect(es, x, g));
    EXPECT_TRUE(ortho_intersect(es, x, h));
  }
  const auto [b1, b2] = common_perpendicular(es, h, g);
  EXPECT_TRUE((b1 == a1 && b2 == a2) || (b1 == a2 && b2 == a1));
}

TEST(CommonPerpendicular, MatchesOracle) {
  const auto es = skewed();
  Sampler rng(17);
  for (int i = 0; i < 30; ++i) {
    const Line g = rng.random_line();
    const Line h = Line::through(rng.random_point_on(g), rng.random_point());
    const auto [a1, a2] = common_perpendicular(es, g, h);
    const auto n = transversal_count(es, g, h);
    ASSERT_EQ(n.kind, TransversalCount::Kind::Finite);
    EXPECT_EQ(n.lines, (std::vector<Line>{std::min(a1, a2), std::max(a1, a2)}));
  }
}

TEST(CommonPerpendicular, Errors) {
  const auto es = EllipticSpace::standard();
  EXPECT_THROW(common_perpendicular(es, kA, kA), GeometryError);
  EXPECT_THROW(common_perpendicular(es, kA, es.polar(kA)), GeometryError);
}

TEST(PlaneMap, Identity) {
  const auto es = EllipticSpace::standard();
  for (Side s : {Side::Left, Side::Right})
    EXPECT_EQ(*induced_plane_map(es, LineMap::identity(), s).matrix(), Mat::identity(3));
}

TEST(PlaneMap, TwoReflections) {
  const auto es = EllipticSpace::standard();
  const PlaneMap m = induced_plane_map(es, e0_then_e1(es), Side::Left);
  EXPECT_EQ(*m.matrix(), Mat::diagonal(v({1, -1, -1})));
  const Mat& k = es.kappa(Side::Left);
  EXPECT_EQ(m.matrix()->transposed() * k * *m.matrix(), k);
}

TEST(PlaneMap, RejectsOpposite) {
  const auto es = EllipticSpace::standard();
  EXPECT_THROW(induced_plane_map(es, LineMap::reflection(es, e(0)), Side::Left), GeometryError);
}

TEST(PlaneMap, DefinitionHolds) {
  const auto es = skewed();
  Sampler rng(19);
  const LineMap c = LineMap::compose(LineMap::reflection(es, rng.random_point()),
                                     LineMap::reflection(es, rng.random_point()));
  for (Side s : {Side::Left, Side::Right}) {
    const PlaneMap m = induced_plane_map(es, c, s);
    for (int i = 0; i < 50; ++i) {
      const Line a = rng.random_line();
      EXPECT_EQ(m.apply(es, es.project_onto(s, a.klein_point())),
                es.project_onto(s, c.apply(a).klein_point()));
    }
    EXPECT_TRUE(check_plane_map_well_defined(es, c, s, 50, 3).passed());
  }
}

TEST(PlaneMap, TableRouteAgreesWithMatrix) {
  const auto es = EllipticSpace::standard();
  const LineMap direct = e0_then_e1(es);
  const LineMap wrapped = LineMap::table(direct, {});
  const PlaneMap table = induced_plane_map(es, wrapped, Side::Left, 40, 5);
  const PlaneMap exact = induced_plane_map(es, direct, Side::Left);
  Sampler rng(5, stream_id("plane-map", 0));
  const Point x = es.project_rho(rng.random_line().klein_point());
  EXPECT_EQ(table.apply(es, x), exact.apply(es, x));
  EXPECT_EQ(table.inverse().apply(es, exact.apply(es, x)), x);
}

TEST(Admissible, FromDirectMap) {
  const auto es = skewed();
  Sampler rng(23);
  const LineMap c = LineMap::compose(LineMap::reflection(es, rng.random_point()),
                                     LineMap::reflection(es, rng.random_point()));
  const PlaneMap z = induced_plane_map(es, c, Side::Left);
  const PlaneMap h = induced_plane_map(es, c, Side::Right);
  const auto rep = admissible_check(es, z, h, 100, 1);
  EXPECT_TRUE(rep.passed()) << to_text(rep.compatible) << to_text(rep.secants);
  const auto inv = admissible_check(es, z.inverse(), h.inverse(), 100, 2);
  EXPECT_TRUE(inv.passed());
}

TEST(Admissible, ShearBreaksCompatibility) {
  const auto es = EllipticSpace::standard();
  const PlaneMap z = PlaneMap::from_matrix(Side::Left, Mat::identity(3));
  const PlaneMap h = PlaneMap::from_matrix(Side::Right, Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto rep = admissible_check(es, z, h, 50, 1);
  EXPECT_FALSE(rep.compatible.passed());
  ASSERT_EQ(rep.compatible.violations.size(), 1u);
  EXPECT_EQ(rep.compatible.violations[0].witness, "side R");
}

TEST(Admissible, ShearBreaksSecantsOnSamples) {
  // On a plane a similitude ratio is a square, so compatibility already forces secant preservation;
  // the shear breaks both.
  const auto es = EllipticSpace::standard();
  const PlaneMap z = PlaneMap::from_matrix(Side::Left, Mat::identity(3));
  const PlaneMap h = PlaneMap::from_matrix(Side::Right, Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_FALSE(admissible_check(es, z, h, 200, 1).secants.passed());
}

TEST(Admissible, IndependentDirectMapsStayAdmissible) {
  const auto es = EllipticSpace::standard();
  const PlaneMap z = induced_plane_map(es, e0_then_e1(es), Side::Left);
  const PlaneMap h = PlaneMap::from_matrix(Side::Right, Mat::identity(3));
  EXPECT_TRUE(admissible_check(es, z, h, 100, 1).passed());
}

TEST(MeetsQuadric, Examples) {
  EXPECT_TRUE(meets_quadric(p({1, 0, 0, 1, 0, 0}), p({1, 0, 0, -1, 0, 0})));
  EXPECT_FALSE(meets_quadric(p({1, 0, 0, 1, 0, 0}), p({0, 1, 0, 0, 1, 0})));
}

}  // namespace
}  // namespace klein3
