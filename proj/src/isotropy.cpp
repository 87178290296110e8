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

#include <algorithm>

namespace klein3 {

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
mpz_class rho_factor(const mpz_class& n, long budget) {
  for (unsigned long c = 1; c <= 5 && budget > 0; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    const long m = 128;
    long r = 1;
    auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    do {
      x = y;
      for (long i = 0; i < r; ++i) y = f(y);
      long k = 0;
      do {
        ys = y;
        for (long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        budget -= std::min(m, r - k);
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1 && budget > 0);
      r *= 2;
    } while (g == 1 && budget > 0);
    if (g == n) {
      do {
        ys = f(ys);
        const mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

bool split(const mpz_class& n, long budget, std::vector<mpz_class>& out) {
  if (n == 1) return true;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return true;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) return split(sqrt(n), budget, out);
  const mpz_class d = rho_factor(n, budget);
  if (d == 0) return false;
  return split(d, budget, out) && split(n / d, budget, out);
}

int valuation(mpz_class& u, const mpz_class& p) {
  int v = 0;
  while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
    u /= p;
    ++v;
  }
  return v;
}

int legendre(const mpz_class& u, const mpz_class& p) {
  return mpz_kronecker(u.get_mpz_t(), p.get_mpz_t());
}

// Odd units of Z_2: eps = (u-1)/2, omega = (u^2-1)/8, both mod 2.
int eps2(const mpz_class& u) { return mpz_fdiv_ui(u.get_mpz_t(), 4) == 1 ? 0 : 1; }
int omega2(const mpz_class& u) {
  const unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
  return r == 1 || r == 7 ? 0 : 1;
}

bool is_local_square(const mpz_class& d, const mpz_class& p) {
  mpz_class u = d;
  if (valuation(u, p) % 2 != 0) return false;
  if (p == 2) return mpz_fdiv_ui(u.get_mpz_t(), 8) == 1;
  return legendre(u, p) == 1;
}

}  // namespace

std::optional<std::vector<mpz_class>> prime_factors(mpz_class n, long budget) {
  if (n == 0) throw GeometryError("prime_factors of zero");
  n = abs(n);
  std::vector<mpz_class> out;
  for (unsigned long p = 2; p < 10000; p += p == 2 ? 1 : 2) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
    if (n == 1) break;
  }
  if (!split(n, budget, out)) return std::nullopt;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p) {
  mpz_class u = a, v = b;
  const int alpha = valuation(u, p), beta = valuation(v, p);
  if (p == 2) {
    const int e = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
    return e % 2 == 0 ? 1 : -1;
  }
  int s = 1;
  const bool p_is_3_mod_4 = mpz_fdiv_ui(p.get_mpz_t(), 4) == 3;
  if (alpha % 2 && beta % 2 && p_is_3_mod_4) s = -s;
  if (beta % 2) s *= legendre(u, p);
  if (alpha % 2) s *= legendre(v, p);
  return s;
}

std::optional<bool> is_isotropic(const Vec& d) {
  const std::size_t m = d.size();
  for (const auto& x : d)
    if (sgn(x) == 0) throw GeometryError("is_isotropic expects nonzero coefficients");
  if (m <= 1) return false;
  // Integers in the same square classes.
  std::vector<mpz_class> a;
  for (const auto& x : d) a.push_back(x.get_num() * x.get_den());
  if (m == 2) return is_square(Scalar(-a[0] * a[1]));
  const bool definite = std::all_of(a.begin(), a.end(), [&](const mpz_class& x) { return sgn(x) == sgn(a[0]); });
  if (definite) return false;
  if (m >= 5) return true;

  std::vector<mpz_class> primes = {2};
  for (const auto& x : d) {
    for (const mpz_class* part : {&x.get_num(), &x.get_den()}) {
      auto f = prime_factors(*part);
      if (!f) return std::nullopt;
      primes.insert(primes.end(), f->begin(), f->end());
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  mpz_class disc = 1;
  for (const auto& x : a) disc *= x;
  for (const auto& p : primes) {
    int hasse = 1;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) hasse *= hilbert_symbol(a[i], a[j], p);
    bool local;
    if (m == 3) {
      local = hasse == hilbert_symbol(-1, -disc, p);
    } else {
      local = !is_local_square(disc, p) || hasse == hilbert_symbol(-1, -1, p);
    }
    if (!local) return false;
  }
  return true;
}

}  // namespace klein3
