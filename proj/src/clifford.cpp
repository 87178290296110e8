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

#include "klein3/clifford.hpp"

#include "klein3/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace klein3 {

bool ortho_intersect(const EllipticSpace& es, const Line& a, const Line& b) {
  return lines_meet(a, b) && lines_meet(a, es.polar(b));
}

bool ortho_intersect_by_projections(const EllipticSpace& es, const Line& a, const Line& b) {
  const Point xa = a.klein_point(), xb = b.klein_point();
  auto conj = [](const Point& x, const Point& y) {
    return sgn(omega_bilinear(x.coords(), y.coords())) == 0;
  };
  return conj(es.project_lambda(xa), es.project_lambda(xb)) &&
         conj(es.project_rho(xa), es.project_rho(xb));
}

bool related(const EllipticSpace& es, const Line& a, const Line& b) {
  return a == b || ortho_intersect(es, a, b);
}

bool left_parallel(const EllipticSpace& es, const Line& a, const Line& b) {
  return es.project_lambda(a.klein_point()) == es.project_lambda(b.klein_point());
}

bool right_parallel(const EllipticSpace& es, const Line& a, const Line& b) {
  return es.project_rho(a.klein_point()) == es.project_rho(b.klein_point());
}

bool parallel(const EllipticSpace& es, Side side, const Line& a, const Line& b) {
  return side == Side::Left ? left_parallel(es, a, b) : right_parallel(es, a, b);
}

bool clifford_parallel(const EllipticSpace& es, const Line& a, const Line& b) {
  return left_parallel(es, a, b) || right_parallel(es, a, b);
}

TransversalCount TransversalCount::finite(std::vector<Line> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  TransversalCount t;
  t.kind = Kind::Finite;
  t.count = static_cast<int>(lines.size());
  t.lines = std::move(lines);
  return t;
}

std::string TransversalCount::str() const {
  switch (kind) {
    case Kind::Finite: return "Finite(" + std::to_string(count) + ")";
    case Kind::Infinite: return "Infinite";
    case Kind::Inconclusive: return "Inconclusive(height<=" + std::to_string(search_bound) + ")";
  }
  return "?";
}

namespace {

TransversalCount binary_form_points(const Subspace& w) {
  const Vec w0 = w.basis().row(0), w1 = w.basis().row(1);
  const Scalar a = omega(w0);
  const Scalar b = omega_bilinear(w0, w1);
  const Scalar c = omega(w1);
  if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0) return TransversalCount::infinite();
  const Scalar disc = b * b - 4 * a * c;
  auto root = square_root(disc);
  if (!root) return TransversalCount::finite({});
  std::vector<Line> lines;
  if (sgn(a) != 0) {
    // a s^2 + b s + c = 0 with t = 1
    for (int sgn_root : {1, -1}) {
      Scalar s = (-b + sgn_root * *root) / (2 * a);
      lines.push_back(Line::from_pluecker(s * w0 + w1));
    }
  } else {
    lines.push_back(Line::from_pluecker(w0));
    if (sgn(b) != 0) lines.push_back(Line::from_pluecker(Scalar(-c) * w0 + Scalar(b) * w1));
  }
  return TransversalCount::finite(std::move(lines));
}

// Searches a rational zero of sum d_i y_i^2 (all d_i nonzero, mixed signs)
// with integer y_0..y_{m-2} of height <= bound, solving for y_{m-1}.
bool search_isotropic(const Vec& d, int bound) {
  const std::size_t m = d.size();
  mpz_class common = 1;
  for (const auto& x : d) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<mpz_class> e;
  for (const auto& x : d) e.push_back(mpz_class(x * common));
  int height = bound;
  if (m > 3) {
    // Keep the number of candidates near 10^5.
    const double per_axis = std::pow(1e5, 1.0 / static_cast<double>(m - 1));
    height = std::max(1, std::min(bound, static_cast<int>(per_axis) - 1));
  }
  std::vector<int> y(m - 1, 0);
  for (;;) {
    // advance odometer over [0, height]^{m-1}
    std::size_t k = 0;
    while (k < y.size() && y[k] == height) y[k++] = 0;
    if (k == y.size()) return false;
    ++y[k];
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < m; ++i) acc += e[i] * y[i] * y[i];
    Scalar last(-acc, e[m - 1]);
    last.canonicalize();
    if (is_square(last)) return true;
  }
}

}  // namespace

TransversalCount quadric_points(const Subspace& w, int search_bound) {
  if (w.ambient_dim() != 5) throw GeometryError("quadric_points expects a subspace of PG(5)");
  if (w.is_empty()) return TransversalCount::finite({});
  if (w.dim() == 0) {
    Vec p = w.basis().row(0);
    if (sgn(omega(p)) == 0) return TransversalCount::finite({Line::from_pluecker(p)});
    return TransversalCount::finite({});
  }
  if (w.dim() == 1) return binary_form_points(w);

  const CongruenceDiagonal diag = diagonalize_symmetric(restricted_klein_form(w));
  Vec nondegenerate;
  std::vector<std::size_t> radical;
  for (std::size_t i = 0; i < diag.diagonal.size(); ++i) {
    if (sgn(diag.diagonal[i]) == 0) {
      radical.push_back(i);
    } else {
      nondegenerate.push_back(diag.diagonal[i]);
    }
  }
  if (nondegenerate.empty() || radical.size() >= 2) return TransversalCount::infinite();

  // Rational zeros of the nondegenerate part, projectively.
  enum class Zeros { None, Two, Many, Unknown } zeros;
  const std::size_t m = nondegenerate.size();
  if (m == 1) {
    zeros = Zeros::None;
  } else if (m == 2) {
    zeros = is_square(-nondegenerate[0] * nondegenerate[1]) ? Zeros::Two : Zeros::None;
  } else if (const auto iso = is_isotropic(nondegenerate)) {
    // A nondegenerate form in >= 3 variables with one rational zero has
    // infinitely many.
    zeros = *iso ? Zeros::Many : Zeros::None;
  } else {
    // Factoring a coefficient failed; fall back to a bounded search.
    zeros = search_isotropic(nondegenerate, search_bound) ? Zeros::Many : Zeros::Unknown;
  }

  if (radical.empty()) {
    // dim >= 2 and nondegenerate: m >= 3 here.
    if (zeros == Zeros::Unknown) return TransversalCount::inconclusive(search_bound);
    return zeros == Zeros::None ? TransversalCount::finite({}) : TransversalCount::infinite();
  }
  // A cone over the nondegenerate part with a single vertex.
  if (zeros == Zeros::Unknown) return TransversalCount::inconclusive(search_bound);
  if (zeros != Zeros::None) return TransversalCount::infinite();
  const Vec vertex_coords = diag.transform.col(radical.front());
  return TransversalCount::finite({Line::from_pluecker(w.point_at(vertex_coords).coords())});
}

namespace {

Subspace transversal_space(const EllipticSpace& es, const std::vector<Line>& lines) {
  Mat eqs(0, 6);
  for (const auto& l : lines) {
    eqs.append_row(klein_gram() * l.pluecker());
    eqs.append_row(klein_gram() * es.polar(l).pluecker());
  }
  return Subspace::solutions(5, eqs);
}

}  // namespace

TransversalCount transversal_count(const EllipticSpace& es, const Line& a, const Line& b,
                                   int search_bound) {
  return quadric_points(transversal_space(es, {a, b}), search_bound);
}

Spread::Spread(const EllipticSpace& es, Line base, Side side)
    : base_(std::move(base)),
      side_(side),
      carrier_(span(es.plane(side), base_.klein_point())),
      key_(es.project_onto(opposite(side), base_.klein_point())) {}

bool Spread::contains(const EllipticSpace& es, const Line& x) const {
  return es.project_onto(opposite(side_), x.klein_point()) == key_;
}

Subspace star(const Point& q) {
  if (q.size() != 4) throw GeometryError("star: expected a point of PG(3)");
  Mat rows(0, 6);
  for (std::size_t i = 0; i < 4; ++i) {
    Vec e(4, Scalar(0));
    e[i] = 1;
    rows.append_row(wedge(q.coords(), e));
  }
  return Subspace::from_rows(5, rows);
}

Line Spread::line_through(const EllipticSpace& /*es*/, const Point& q) const {
  Subspace m = meet(star(q), carrier_);
  if (m.dim() != 0) {
    throw GeometryError("internal inconsistency: star of " + q.str() +
                        " meets the spread carrier in dimension " + std::to_string(m.dim()));
  }
  return Line::from_pluecker(m.basis().row(0));
}

Regulus::Regulus(const EllipticSpace& es, Spread spread, Line transversal)
    : spread_(std::move(spread)),
      transversal_(std::move(transversal)),
      p0_(transversal_.points().first),
      p1_(transversal_.points().second) {
  if (spread_.contains(es, transversal_))
    throw GeometryError("regulus transversal " + transversal_.str() + " belongs to the spread");
}

Line Regulus::member_at(const EllipticSpace& es, const Point& q) const {
  if (!transversal_.contains(q)) throw GeometryError("point " + q.str() + " is not on the transversal");
  return spread_.line_through(es, q);
}

Line Regulus::member(const EllipticSpace& es, const Scalar& s, const Scalar& t) const {
  return spread_.line_through(es, Point(s * p0_.coords() + t * p1_.coords()));
}

bool Regulus::contains(const EllipticSpace& es, const Line& x) const {
  return spread_.contains(es, x) && lines_meet(x, transversal_);
}

RelatedChain related_chain(const EllipticSpace& es, const Line& a, Sampler& rng) {
  const Line ap = es.polar(a);
  const Point a0 = rng.random_point_on(a);
  const Point a1p = rng.random_point_on(ap);
  const Point a2p = meet(es.pi().polar(Subspace::of(a1p)), ap.subspace()).as_point();
  return {a, ap, Line::through(a0, a1p), Line::through(a0, a2p)};
}

Line random_parallel(const EllipticSpace& es, const Line& a, Side side, Sampler& rng) {
  const Spread sp(es, a, side);
  const Line ap = es.polar(a);
  for (;;) {
    Point q = rng.random_point();
    if (a.contains(q) || ap.contains(q)) continue;
    return sp.line_through(es, q);
  }
}

namespace {

void require_ortho(const EllipticSpace& es, const Line& a, const Line& b) {
  if (!ortho_intersect(es, a, b))
    throw GeometryError("precondition a ≈ b violated for a=" + a.str() + ", b=" + b.str());
}

std::string pair_str(const Line& x, const Line& y) { return "x=" + x.str() + " y=" + y.str(); }

// Does some member of `sp` satisfy y ≈ x?
TransversalCount partners_in_spread(const EllipticSpace& es, const Line& x, const Spread& sp) {
  Mat eqs(0, 6);
  eqs.append_row(klein_gram() * x.pluecker());
  eqs.append_row(klein_gram() * es.polar(x).pluecker());
  return quadric_points(meet(sp.carrier(), Subspace::solutions(5, eqs)));
}

Report check_partner_relation(const char* name, const EllipticSpace& es, const Line& a,
                              const Line& b, Side side, std::size_t samples, std::uint64_t seed) {
  // Members x of S_side(a); partners searched in S_other(b); expected iff x meets b.
  const Spread sa(es, a, side);
  const Spread sb(es, b, opposite(side));
  Report r{name, seed, samples};
  Sampler rng(seed, stream_id(name));
  for (std::size_t i = 0; i < samples; ++i) {
    const Point q = (i % 2 == 0) ? rng.random_point_on(b) : rng.random_point();
    const Line x = sa.line_through(es, q);
    const bool expected = lines_meet(x, b);
    const TransversalCount partners = partners_in_spread(es, x, sb);
    if (!partners.is_conclusive()) {
      ++r.inconclusive;
      continue;
    }
    const bool actual = !partners.is_empty();
    if (expected != actual) {
      r.fail(i, "x=" + x.str() + " through " + q.str(),
             expected ? "partner exists (x meets b)" : "no partner (x misses b)",
             "partners " + partners.str());
    }
  }
  return r;
}

}  // namespace

Report check_spread_pairing(const EllipticSpace& es, const Line& a, const Line& b, Side side,
                        std::size_t samples, std::uint64_t seed) {
  require_ortho(es, a, b);
  const Spread sa(es, a, side), sb(es, b, side);
  Report r{"rel6", seed, samples};
  Sampler rng(seed, stream_id("rel6"));
  for (std::size_t i = 0; i < samples; ++i) {
    const Point q = rng.random_point();
    const Line x = sa.line_through(es, q);
    const Line y = sb.line_through(es, q);
    if (!ortho_intersect(es, x, y)) r.fail(i, pair_str(x, y) + " at Q=" + q.str(), "x ≈ y", "not ≈");
  }
  return r;
}

Report check_partners_meet_second(const EllipticSpace& es, const Line& a, const Line& b, Side side,
                        std::size_t samples, std::uint64_t seed) {
  require_ortho(es, a, b);
  return check_partner_relation("rel7", es, a, b, side, samples, seed);
}

Report check_partners_meet_first(const EllipticSpace& es, const Line& a, const Line& b, Side side,
                        std::size_t samples, std::uint64_t seed) {
  require_ortho(es, a, b);
  return check_partner_relation("rel8", es, b, a, opposite(side), samples, seed);
}

Report check_reguli_orthogonal(const EllipticSpace& es, const Line& a, const Line& b, Side side,
                        std::size_t samples, std::uint64_t seed) {
  require_ortho(es, a, b);
  const Regulus ra(es, Spread(es, a, side), b);
  const Regulus rb(es, Spread(es, b, opposite(side)), a);
  Report r{"rel9", seed, samples * samples};
  Sampler rng(seed, stream_id("rel9"));
  std::vector<Line> xs, ys;
  xs.push_back(a);
  ys.push_back(b);
  while (xs.size() < samples) xs.push_back(ra.member_at(es, rng.random_point_on(b)));
  while (ys.size() < samples) ys.push_back(rb.member_at(es, rng.random_point_on(a)));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (!ortho_intersect(es, xs[i], ys[j]))
        r.fail(i * samples + j, pair_str(xs[i], ys[j]), "x ≈ y", "not ≈");
  return r;
}

std::string ClassicalityReport::str() const {
  std::ostringstream out;
  out << "char F != 2: " << (char_not_two ? "yes" : "no") << "\n"
      << "projective polarity (symmetric, invertible): " << (symmetric && invertible ? "yes" : "no")
      << "\n"
      << "anisotropy certified (definite): " << (anisotropic ? "yes" : "no") << "\n";
  if (alpha_square) {
    out << "alpha^2 = " << to_string(*alpha_square) << " I"
        << (sigma_is_square ? " (square)" : " (not a square)") << "\n";
  }
  out << "eigenspace dimensions (+1,-1): (" << plus_dim << "," << minus_dim << ")\n";
  if (witness) {
    out << "Clifford parallel witness: a=" << witness->first.str() << " b=" << witness->second.str()
        << "\n";
  }
  out << (classical() ? "classical" : "not classical: " + reason);
  return out.str();
}

ClassicalityReport classicality_report(const Mat& form) {
  ClassicalityReport rep;
  rep.symmetric = form.rows() == 4 && form.cols() == 4 && form.is_symmetric();
  if (!rep.symmetric) {
    rep.reason = "form is not a symmetric 4x4 matrix";
    return rep;
  }
  rep.invertible = sgn(determinant(form)) != 0;
  if (!rep.invertible) {
    rep.reason = "form is singular";
    return rep;
  }
  rep.anisotropic = certify_anisotropic(form);
  if (!rep.anisotropic) {
    rep.reason = "form is not certified anisotropic (not definite)";
    return rep;
  }
  const Polarity pi(form);
  const Mat raw = swap_matrix() * second_compound(form);
  const Mat sq = raw * raw;
  if (sq == sq(0, 0) * Mat::identity(6)) rep.alpha_square = sq(0, 0);
  rep.sigma_is_square = rep.alpha_square && is_square(*rep.alpha_square);
  if (rep.sigma_is_square) {
    const Mat a = alpha_matrix(pi);
    rep.plus_dim = static_cast<int>(kernel(a - Mat::identity(6)).rows());
    rep.minus_dim = static_cast<int>(kernel(a + Mat::identity(6)).rows());
  }
  try {
    const EllipticSpace es(pi);
    const Line a = Line::through(Point{1, 0, 0, 0}, Point{0, 1, 0, 0});
    const Line ap = es.polar(a);
    const Spread sl(es, a, Side::Left);
    for (const Point& q : {Point{0, 1, 1, 0}, Point{1, 1, 1, 1}, Point{1, 2, 3, 4}, Point{0, 0, 1, 0}}) {
      if (a.contains(q) || ap.contains(q)) continue;
      const Line b = sl.line_through(es, q);
      if (b == a || b == ap) continue;
      if (transversal_count(es, a, b).is_infinite()) {
        rep.witness = std::make_pair(a, b);
        break;
      }
    }
    if (!rep.witness) rep.reason = "no Clifford parallel witness found";
  } catch (const NotClassical& e) {
    rep.reason = e.what();
  }
  return rep;
}

}  // namespace klein3
