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

#include "klein3/gnomonic.hpp"

#include <array>

namespace klein3 {

namespace {

// Plane geometry in PG(2), on coordinate vectors of length 3.
Point pt(const Vec& x) { return Point(x); }
Subspace join(const Vec& x, const Vec& y) { return span(pt(x), pt(y)); }
Subspace polar_line(const Mat& s, const Vec& x) { return Subspace::hyperplane(s * x); }
Vec pole(const Mat& s, const Subspace& line) {
  return Subspace::solutions(2, line.basis() * s).as_point().coords();
}
Vec cut(const Subspace& l, const Subspace& m) { return meet(l, m).as_point().coords(); }
bool conj(const Mat& s, const Vec& x, const Vec& y) { return sgn(bilinear(x, s, y)) == 0; }
bool same(const Vec& x, const Vec& y) { return pt(x) == pt(y); }

Vec quadratic_row(const Vec& x) {
  return {x[0] * x[0], 2 * x[0] * x[1], 2 * x[0] * x[2], x[1] * x[1], 2 * x[1] * x[2], x[2] * x[2]};
}

}  // namespace

Point gnomonic_center(const EllipticSpace& es, const Spread& sp) {
  return meet(es.plane(opposite(sp.side())), sp.carrier()).as_point();
}

Point gnomonic_project(const EllipticSpace& es, const Spread& sp, const Point& x) {
  if (!sp.carrier().contains(x)) throw GeometryError("point " + x.str() + " is off the spread carrier");
  const Point z = gnomonic_center(es, sp);
  if (x == z) throw GeometryError("cannot project the centre of the projection");
  return meet(span(z, x), es.plane(sp.side())).as_point();
}

Conic conic_k(const EllipticSpace& es, const Line& a, const Line& t) {
  if (!lines_meet(a, t)) throw GeometryError("t must meet a");
  if (related(es, a, t)) throw GeometryError("t must not be related to a");
  if (lines_meet(es.polar(a), t)) throw GeometryError("regulus through t contains a^pi");

  const Regulus reg(es, Spread(es, a, Side::Left), t);
  Conic k;
  k.plane = es.left_plane();
  k.param = [es, reg](const Scalar& s, const Scalar& u) {
    const Line x = reg.member(es, s, u);
    return es.plane_coords(Side::Left, es.project_rho(x.klein_point()));
  };

  const std::array<std::pair<int, int>, 5> fit = {{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}}};
  Mat rows(0, 6);
  for (auto [s, u] : fit) rows.append_row(quadratic_row(k.param(s, u)));
  const Mat ker = kernel(rows);
  if (ker.rows() != 1) throw GeometryError("regulus image is not a unique conic");
  const Vec c = ker.row(0);
  k.form = Mat{{c[0], c[1], c[2]}, {c[1], c[3], c[4]}, {c[2], c[4], c[5]}};
  for (int j = 2; j <= 11; ++j) {
    const int u = j <= 6 ? j + 1 : 4 - j;  // 3..7, then -3..-7
    if (!k.contains(k.param(1, u)))
      throw GeometryError("regulus point off the fitted conic at parameter (1:" + std::to_string(u) + ")");
  }
  if (sgn(determinant(k.form)) == 0) throw GeometryError("fitted conic is degenerate");
  return k;
}

bool interior_point(const Conic& c, const Vec& u) {
  const Scalar det = determinant(c.form);
  if (sgn(det) == 0) throw GeometryError("degenerate conic");
  if (definite_sign(c.form) != 0) throw GeometryError("conic without real points");
  if (c.contains(u)) throw GeometryError("point lies on the conic");
  // Signature (2,1) up to sign: the inside is where value and determinant
  // have the same sign.
  const bool inside = sgn(c.value(u)) * sgn(det) > 0;
  if (inside) {
    // Two lines through u must then be secants.
    int tested = 0;
    for (std::size_t i = 0; i < 3 && tested < 2; ++i) {
      Vec v(3, Scalar(0));
      v[i] = 1;
      if (same(u, v)) continue;
      const Scalar b = c.polar_value(u, v);
      if (sgn(b * b - c.value(u) * c.value(v)) <= 0)
        throw GeometryError("interior test disagrees with the secant discriminant");
      ++tested;
    }
  }
  return inside;
}

Vec second_intersection(const Conic& c, const Vec& x, const Vec& u) {
  const Scalar mu = -2 * c.polar_value(x, u) / c.value(u);
  return x + mu * u;
}

Line quadrangle_partner(const EllipticSpace& es, const Line& a, Sampler& rng) {
  const Line ap = es.polar(a);
  for (;;) {
    const Point p0 = rng.random_point_on(a);
    const Point p = rng.random_point();
    if (a.contains(p)) continue;
    const Line t = Line::through(p0, p);
    if (related(es, a, t) || lines_meet(ap, t)) continue;
    return t;
  }
}

Report quadrangle_configuration(const EllipticSpace& es, const Line& a, const Line& t,
                           const LineMap& phi, std::size_t samples, std::uint64_t seed) {
  Report r{"quadrangle", seed, samples};
  const Conic k = conic_k(es, a, t);
  const Mat& kl = es.kappa(Side::Left);
  const Mat& cf = k.form;
  const std::string where = "a=" + a.str() + " t=" + t.str();

  // u = W n E_L, with W the plane of the regulus.
  const Regulus reg(es, Spread(es, a, Side::Left), t);
  std::vector<Subspace> members;
  for (auto [s, v] : {std::pair{1, 0}, {0, 1}, {1, 1}, {1, 2}})
    members.push_back(Subspace::of(reg.member(es, s, v).klein_point()));
  const Subspace w = span(members);
  if (w.dim() != 2) throw GeometryError("regulus does not span a plane");
  const Subspace u6 = meet(w, es.left_plane());
  if (u6.dim() != 1) throw GeometryError("W n E_L is not a line");
  Mat urows(0, 3);
  for (std::size_t i = 0; i < 2; ++i) urows.append_row(es.plane_coords(Side::Left, Point(u6.basis().row(i))));
  const Subspace u = Subspace::from_rows(2, urows);

  const Vec upole = pole(kl, u);
  if (!same(upole, pole(cf, u)))
    r.fail(0, where, "pole of u equal for k and kappa_L", "poles differ");
  if (!interior_point(k, upole)) r.fail(0, where, "U interior to k", "U exterior");

  // Both polarities induce one involution on u.
  for (int i = 0; i < 10; ++i) {
    const Vec p = urows.row(0) + Scalar(i - 4) * urows.row(1);
    if (!same(cut(u, polar_line(kl, p)), cut(u, polar_line(cf, p))))
      r.fail(0, where + " P=" + to_string(p), "same involution on u", "conjugates differ");
  }

  const PlaneMap phil = induced_plane_map(es, phi, Side::Left);
  const Mat& z = *phil.matrix();
  const Vec zu = z * upole;

  // A, B on k, collinear with U, with distinct images.
  Vec pa, pb;
  for (int j = 0;; ++j) {
    if (j > 50) throw GeometryError("no admissible pair A, B on k");
    pa = k.param(1, j);
    pb = second_intersection(k, pa, upole);
    if (!same(z * pa, z * pb) && !same(z * pa, zu) && !same(z * pb, zu)) break;
  }
  const Subspace ab = join(pa, pb);
  const Vec zpa = z * pa, zpb = z * pb;
  const Subspace zab = join(zpa, zpb);

  if (!zab.contains(pt(zu))) r.fail(0, where, "U' on A' v B'", "U' off A' v B'");

  Sampler rng(seed, stream_id("prop9"));
  for (std::size_t i = 0; i < samples; ++i) {
    Vec x;
    do {
      const Scalar s = rng.uniform(-9, 9), v = rng.uniform(-9, 9);
      if (sgn(s) == 0 && sgn(v) == 0) continue;
      x = k.param(s, v);
    } while (x.empty() || same(x, pa) || same(x, pb));
    const std::string wit = where + " X=" + to_string(x);

    const Vec xb = second_intersection(k, x, upole);
    if (same(x, xb) || !k.contains(xb)) {
      r.fail(i, wit, "second point on X v U", "tangent or off k");
      continue;
    }
    const Vec xa = cut(join(pa, x), join(pb, xb));
    const Vec xbd = cut(join(pb, x), join(pa, xb));
    for (const Mat* s : {&cf, &kl}) {
      const char* name = s == &cf ? "k" : "kappa_L";
      if (!conj(*s, upole, xa) || !conj(*s, upole, xbd) || !conj(*s, xa, xbd))
        r.fail(i, wit, std::string("diagonal triangle self-polar for ") + name, "not self-polar");
    }
    if (!(join(xa, xbd) == u)) r.fail(i, wit, "u = X_A v X_B", "different line");

    const Vec zx = z * x, zxb = z * xb, zxa = z * xa, zxbd = z * xbd;
    const std::array<const Vec*, 4> quad = {&zpa, &zpb, &zx, &zxb};
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = p + 1; q < 4; ++q)
        if (same(*quad[p], *quad[q])) r.fail(i, wit, "images of A, B, X, Xbar distinct", "two images coincide");
    if (zab.contains(pt(zx))) r.fail(i, wit, "X' off A' v B'", "X' on A' v B'");
    for (const Vec* p : quad)
      if (same(*p, zu)) r.fail(i, wit, "P' != U'", "P' = U'");
    // Image triangle stays self-polar for kappa_L.
    if (!conj(kl, zu, zxa) || !conj(kl, zu, zxbd) || !conj(kl, zxa, zxbd))
      r.fail(i, wit, "image triangle kappa_L-self-polar", "not self-polar");
    const Subspace uprime = polar_line(kl, zu);
    if (!(uprime == join(zxa, zxbd))) r.fail(i, wit, "u' = X_A' v X_B'", "different line");
    if (uprime == zab) r.fail(i, wit, "u' != A' v B'", "u' = A' v B'");
    // C' and the fourth harmonic point.
    const Vec c = cut(u, ab);
    const Vec zc = z * c;
    if (!same(zc, cut(uprime, zab))) r.fail(i, wit, "C' = u' n (A' v B')", "different point");
    if (same(zc, zxa)) r.fail(i, wit, "C' != X_A'", "C' = X_A'");
    if (!(harmonic_conjugate(pt(zpa), pt(zpb), pt(zu)) == pt(zc)))
      r.fail(i, wit, "C' fourth harmonic of A', B', U'", "not harmonic");
  }
  r.exact = false;
  return r;
}

}  // namespace klein3
