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

#include <algorithm>

#include "klein3/sampling.hpp"

namespace klein3 {

LineMap LineMap::identity() {
  LineMap m;
  m.kind_ = Kind::Identity;
  m.label_ = "identity";
  m.point_matrix_ = Mat::identity(4);
  m.induced_ = Mat::identity(6);
  return m;
}

LineMap LineMap::reflection(const EllipticSpace& es, const Point& center) {
  if (center.size() != 4) throw GeometryError("reflection centre must be a point of PG(3)");
  // (Q^T M Q) I - 2 Q Q^T M, a scalar multiple of I - 2 Q Q^T M / (Q^T M Q).
  const Mat& form = es.pi().form();
  const Vec& q = center.coords();
  const Scalar norm = es.pi().value(q, q);
  const Vec qm = form * q;  // M symmetric: (Q^T M)^T = M Q
  Mat h = norm * Mat::identity(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) h(i, j) -= 2 * q[i] * qm[j];
  LineMap m = collineation(std::move(h), "reflection" + center.str());
  m.kind_ = Kind::Reflection;
  return m;
}

LineMap LineMap::collineation(Mat point_matrix, std::string label) {
  if (point_matrix.rows() != 4 || point_matrix.cols() != 4 || sgn(determinant(point_matrix)) == 0)
    throw GeometryError("collineation needs an invertible 4x4 matrix");
  LineMap m;
  m.kind_ = Kind::Collineation;
  m.label_ = std::move(label);
  m.induced_ = second_compound(point_matrix);
  m.point_matrix_ = std::move(point_matrix);
  return m;
}

LineMap LineMap::compose(const LineMap& first, const LineMap& second) {
  LineMap m;
  m.kind_ = Kind::Composite;
  m.label_ = first.label_ + " then " + second.label_;
  if (first.matrix_backed() && second.matrix_backed()) {
    m.point_matrix_ = *second.point_matrix_ * *first.point_matrix_;
    m.induced_ = *second.induced_ * *first.induced_;
  } else {
    m.parts_ = {first, second};
  }
  return m;
}

LineMap LineMap::table(LineMap base, std::vector<std::pair<Line, Line>> overrides) {
  LineMap m;
  m.kind_ = Kind::Table;
  m.label_ = "table over " + base.label_;
  for (auto& [from, to] : overrides) {
    if (!m.overrides_.emplace(from, to).second)
      throw GeometryError("duplicate table entry for " + from.str());
  }
  m.parts_ = {std::move(base)};
  return m;
}

std::vector<Line> LineMap::override_keys() const {
  std::vector<Line> keys;
  for (const auto& [k, v] : overrides_) keys.push_back(k);
  for (const auto& p : parts_) {
    auto sub = p.override_keys();
    keys.insert(keys.end(), sub.begin(), sub.end());
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

Line LineMap::apply(const Line& a) const {
  if (auto it = overrides_.find(a); it != overrides_.end()) return it->second;
  if (induced_) return Line::from_pluecker(*induced_ * a.pluecker());
  Line x = a;
  for (const auto& p : parts_) x = p.apply(x);
  return x;
}

LineMap LineMap::inverse() const {
  if (!matrix_backed()) throw GeometryError("inverse of a map that is not matrix-backed");
  LineMap m = collineation(*klein3::inverse(*point_matrix_), "inverse of " + label_);
  return m;
}

namespace {

struct LinePair {
  Line a;
  Line b;
};

std::vector<Line> coordinate_lines() {
  std::vector<Line> out;
  for (std::size_t k = 0; k < 6; ++k) {
    Vec p(6, Scalar(0));
    p[k] = 1;
    out.push_back(Line::from_pluecker(p));
  }
  return out;
}

std::vector<LinePair> anchor_pairs(const EllipticSpace& es, const LineMap& phi, std::uint64_t seed) {
  std::vector<LinePair> pairs;
  const auto coords = coordinate_lines();
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j) pairs.push_back({coords[i], coords[j]});
  Sampler rng(seed, stream_id("anchors"));
  for (const auto& k : phi.override_keys()) {
    for (const auto& c : coords)
      if (!(c == k)) pairs.push_back({k, c});
    const RelatedChain ch = related_chain(es, k, rng);
    pairs.push_back({k, ch.a1});
    pairs.push_back({k, ch.a2});
    pairs.push_back({ch.a_polar, k});
    pairs.push_back({k, k});
  }
  return pairs;
}

LinePair sampled_pair(const EllipticSpace& es, std::size_t trial, std::uint64_t seed) {
  Sampler rng(seed, stream_id("condition", trial));
  const Line a = rng.random_line();
  switch (trial % 5) {
    case 0: return {a, rng.random_line()};
    case 4: return {a, a};
    default: break;
  }
  const RelatedChain ch = related_chain(es, a, rng);
  switch (trial % 5) {
    case 1: return {a, ch.a1};
    case 2: return {ch.a1, ch.a2};
    default: return {ch.a_polar, ch.a2};
  }
}

}  // namespace

Report check_condition(const EllipticSpace& es, const LineMap& phi, ConditionMode mode,
                       std::size_t trials, std::uint64_t seed) {
  std::vector<LinePair> pairs = anchor_pairs(es, phi, seed);
  for (std::size_t i = 0; i < trials; ++i) pairs.push_back(sampled_pair(es, i, seed));
  Report r{mode == ConditionMode::Iff ? "condition iff" : "condition forward", seed, pairs.size()};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const Line pa = phi.apply(a), pb = phi.apply(b);
    const bool before = related(es, a, b);
    const bool after = related(es, pa, pb);
    const std::string witness = "a=" + a.str() + " b=" + b.str() + " -> " + pa.str() + ", " + pb.str();
    if (before && !after) r.fail(i, witness, "images related", "images not related");
    if (mode == ConditionMode::Iff && !before && after)
      r.fail(i, witness, "images not related", "images related");
  }
  return r;
}

const char* classification_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::Direct: return "direct";
    case Classification::Kind::Opposite: return "opposite";
    case Classification::Kind::Neither: return "neither";
  }
  return "?";
}

Classification classify(const EllipticSpace& es, const LineMap& phi, std::size_t trials,
                        std::uint64_t seed) {
  using K = Classification::Kind;
  Classification c;
  const Report forward = check_condition(es, phi, ConditionMode::Forward, trials, seed);
  if (!forward.passed()) {
    c.kind = c.sampled = K::Neither;
    c.note = "forward condition fails: " + forward.violations.front().witness;
    return c;
  }

  // Sampled parallel pairs, plus pairs through explicitly overridden lines.
  std::vector<std::pair<LinePair, Side>> pairs;
  Sampler anchor_rng(seed, stream_id("classify-anchors"));
  for (const auto& k : phi.override_keys())
    for (Side s : {Side::Left, Side::Right})
      pairs.push_back({{k, random_parallel(es, k, s, anchor_rng)}, s});
  for (std::size_t i = 0; i < trials; ++i) {
    Sampler rng(seed, stream_id("classify", i));
    const Line a = rng.random_line();
    const Side s = i % 2 == 0 ? Side::Left : Side::Right;
    pairs.push_back({{a, random_parallel(es, a, s, rng)}, s});
  }
  std::optional<std::pair<Line, Line>> breaks_direct, breaks_opposite, breaks_both;
  for (const auto& [pair, side] : pairs) {
    const Line pa = phi.apply(pair.a), pb = phi.apply(pair.b);
    const bool same = parallel(es, side, pa, pb);
    const bool swapped = parallel(es, opposite(side), pa, pb);
    if (!same && !breaks_direct) breaks_direct = std::make_pair(pair.a, pair.b);
    if (!swapped && !breaks_opposite) breaks_opposite = std::make_pair(pair.a, pair.b);
    if (!same && !swapped && !breaks_both) breaks_both = std::make_pair(pair.a, pair.b);
  }
  if (!breaks_direct) {
    c.sampled = K::Direct;
  } else if (!breaks_opposite) {
    c.sampled = K::Opposite;
  } else {
    c.sampled = K::Neither;
    if (breaks_both) {
      c.witness = {*breaks_both};
    } else {
      c.witness = {*breaks_direct, *breaks_opposite};
    }
  }
  c.kind = c.sampled;

  if (phi.matrix_backed()) {
    c.exact = true;
    const Subspace image = Subspace::from_rows(5, es.left_plane().basis() * phi.induced()->transposed());
    if (image == es.left_plane()) {
      c.kind = K::Direct;
    } else if (image == es.right_plane()) {
      c.kind = K::Opposite;
    } else {
      c.kind = K::Neither;
    }
    if (c.kind != c.sampled)
      c.note = std::string("sampled pairs suggest ") + classification_name(c.sampled);
  }
  return c;
}

std::pair<Line, Line> common_perpendicular(const EllipticSpace& es, const Line& g, const Line& h) {
  if (g == h) throw GeometryError("common perpendicular of a line with itself");
  if (!lines_meet(g, h)) throw GeometryError("common perpendicular of skew lines " + g.str() + ", " + h.str());
  const Point p = intersection_point(g, h);
  const Subspace a = meet(es.pi().polar(Subspace::of(p)), span(g.subspace(), h.subspace()));
  const auto basis = a.basis();
  const Line perp = Line::through(Point(basis.row(0)), Point(basis.row(1)));
  return {perp, es.polar(perp)};
}

PlaneMap PlaneMap::from_matrix(Side side, Mat m) {
  if (m.rows() != 3 || m.cols() != 3 || sgn(determinant(m)) == 0)
    throw GeometryError("plane map needs an invertible 3x3 matrix");
  PlaneMap p;
  p.side_ = side;
  p.matrix_ = std::move(m);
  return p;
}

PlaneMap PlaneMap::empty_table(Side side) {
  PlaneMap p;
  p.side_ = side;
  return p;
}

Vec PlaneMap::apply_coords(const Vec& x) const {
  if (!matrix_) throw GeometryError("plane map has no matrix");
  return *matrix_ * x;
}

Point PlaneMap::apply(const EllipticSpace& es, const Point& x) const {
  if (matrix_) return es.plane_point(side_, apply_coords(es.plane_coords(side_, x)));
  auto it = table_.find(x);
  if (it == table_.end()) throw GeometryError("plane map not known at " + x.str());
  return it->second;
}

void PlaneMap::record(const Point& x, const Point& image) {
  auto [it, inserted] = table_.emplace(x, image);
  if (!inserted && !(it->second == image)) {
    throw GeometryError("plane map is not well defined at " + x.str() + ": " + it->second.str() +
                        " vs " + image.str());
  }
}

PlaneMap PlaneMap::inverse() const {
  PlaneMap p;
  p.side_ = side_;
  if (matrix_) {
    p.matrix_ = *klein3::inverse(*matrix_);
  } else {
    for (const auto& [x, y] : table_) p.record(y, x);
  }
  return p;
}

PlaneMap induced_plane_map(const EllipticSpace& es, const LineMap& phi, Side side,
                           std::size_t trials, std::uint64_t seed) {
  const Classification c = classify(es, phi, phi.matrix_backed() ? 0 : trials, seed);
  if (c.kind != Classification::Kind::Direct) {
    throw GeometryError("induced plane map requires a direct map, got " +
                        std::string(classification_name(c.kind)));
  }
  const Subspace& plane = es.plane(side);
  if (phi.matrix_backed()) {
    // Columns are the images of the basis vectors, read off at the pivot
    // columns so the exact scale survives.
    Mat m(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
      const Vec image = *phi.induced() * plane.basis().row(j);
      for (std::size_t i = 0; i < 3; ++i) m(i, j) = image[plane.pivots()[i]];
    }
    return PlaneMap::from_matrix(side, std::move(m));
  }
  PlaneMap out = PlaneMap::empty_table(side);
  for (std::size_t i = 0; i < trials; ++i) {
    Sampler rng(seed, stream_id("plane-map", i));
    const Line a = rng.random_line();
    out.record(es.project_onto(side, a.klein_point()), es.project_onto(side, phi.apply(a).klein_point()));
  }
  return out;
}

Report check_plane_map_well_defined(const EllipticSpace& es, const LineMap& phi, Side side,
                                    std::size_t trials, std::uint64_t seed) {
  Report r{std::string("plane map ") + side_name(side) + " well defined", seed, trials};
  for (std::size_t i = 0; i < trials; ++i) {
    Sampler rng(seed, stream_id("well-defined", i));
    const Line a = rng.random_line();
    // Same projection onto E_side means parallel on the other side.
    const Line b = random_parallel(es, a, opposite(side), rng);
    const Point ia = es.project_onto(side, phi.apply(a).klein_point());
    const Point ib = es.project_onto(side, phi.apply(b).klein_point());
    if (!(ia == ib)) r.fail(i, "a=" + a.str() + " b=" + b.str(), ia.str(), ib.str());
  }
  return r;
}

bool meets_quadric(const Point& x, const Point& y) {
  const TransversalCount n = quadric_points(span(x, y));
  return n.is_infinite() || n.count > 0;
}

AdmissibilityReport admissible_check(const EllipticSpace& es, const PlaneMap& zeta,
                                     const PlaneMap& eta, std::size_t trials, std::uint64_t seed) {
  if (!zeta.matrix_backed() || !eta.matrix_backed())
    throw GeometryError("admissibility check needs matrix-backed plane maps");
  if (zeta.side() != Side::Left || eta.side() != Side::Right)
    throw GeometryError("admissibility check expects a map of E_L and a map of E_R");
  AdmissibilityReport out{{"polarity compatibility", seed, 2}, {"secant preservation", seed, trials}};

  std::size_t trial = 0;
  for (const PlaneMap* m : {&zeta, &eta}) {
    const Mat& k = es.kappa(m->side());
    const Mat pulled = m->matrix()->transposed() * k * *m->matrix();
    if (!pulled.proportional_to(k)) {
      out.compatible.fail(trial, std::string("side ") + side_name(m->side()),
                   "Z^T kappa Z proportional to kappa", to_string(pulled));
    }
    ++trial;
  }

  for (std::size_t i = 0; i < trials; ++i) {
    Sampler rng(seed, stream_id("secants", i));
    const Line a = rng.random_line();
    const Point x = es.project_onto(Side::Left, a.klein_point());
    // Even trials use both projections of one line, so the join is a secant.
    const Line b = i % 2 == 0 ? a : rng.random_line();
    const Point y = es.project_onto(Side::Right, b.klein_point());
    if (!meets_quadric(x, y)) continue;
    const Point xi = zeta.apply(es, x);
    const Point yi = eta.apply(es, y);
    if (!meets_quadric(xi, yi))
      out.secants.fail(i, "X=" + x.str() + " Y=" + y.str(), "image join meets Gamma",
                   "image join " + xi.str() + " v " + yi.str() + " misses Gamma");
  }
  return out;
}

}  // namespace klein3
