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

// Acceptance run: one PASS/FAIL line per criterion. Exit status 0 iff all
// criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "klein3/io.hpp"
#include "klein3/verify.hpp"

using namespace klein3;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void line(int n, bool ok, const std::string& what) {
  std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string summary(const Report& r) {
  std::string s = r.scenario + " trials " + std::to_string(r.trials) + ", violations " +
                  std::to_string(r.violations.size()) + ", inconclusive " + std::to_string(r.inconclusive);
  if (!r.violations.empty()) s += "; first: " + r.violations.front().witness + " expected " + r.violations.front().expected;
  return s;
}

Line polar_by_subspace(const EllipticSpace& es, const Line& a) {
  const Subspace s = es.pi().polar(a.subspace());
  return Line::through(Point(s.basis().row(0)), Point(s.basis().row(1)));
}

constexpr std::uint64_t kSeed = 1;

}  // namespace

int main() {
  const EllipticSpace es = EllipticSpace::standard();
  const std::size_t n = 1000;

  {  // Klein core
    const auto t0 = Clock::now();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Sampler rng(kSeed, stream_id("acceptance-klein", i));
      const Line a = rng.random_line();
      const auto [x, y] = klein_inverse(a);
      const bool ok = sgn(omega(a.pluecker())) == 0 && klein_map(x, y) == a &&
                      Point(es.alpha() * a.pluecker()) == polar_by_subspace(es, a).klein_point();
      bad += !ok;
    }
    const double dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof buf, "Klein core: %zu lines, %zu failures, %.2f s (limit 10 s)", n, bad, dt);
    line(1, bad == 0 && dt < 10.0, buf);
  }

  {  // meeting criterion
    std::size_t bad = 0, meeting = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Sampler rng(kSeed, stream_id("acceptance-meet", i));
      const Line a = rng.random_line();
      const Line b = i % 2 ? rng.random_line() : Line::through(rng.random_point_on(a), rng.random_point());
      const auto [x, y] = a.points();
      const auto [z, w] = b.points();
      const bool low = rank(Mat::from_rows({x.coords(), y.coords(), z.coords(), w.coords()}, 4)) <= 3;
      const bool conj = sgn(omega_bilinear(a.pluecker(), b.pluecker())) == 0;
      bad += low != conj;
      meeting += low;
    }
    line(2, bad == 0 && meeting > 0 && meeting < n,
         "meeting criterion: " + std::to_string(n) + " pairs (" + std::to_string(meeting) + " meeting), " +
             std::to_string(bad) + " mismatches");
  }

  {  // harmonic range, with projections taken through the meet construction
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Sampler rng(kSeed, stream_id("acceptance-harmonic", i));
      const Line a = rng.random_line();
      const Point x = a.klein_point();
      const CrossRatio cr = cross_ratio(es.project_lambda_by_meet(x), es.project_rho_by_meet(x), x,
                                        polar_by_subspace(es, a).klein_point());
      bad += cr.is_infinite() || *cr.value != -1;
    }
    line(3, bad == 0, "harmonic range: " + std::to_string(n) + " lines, " + std::to_string(bad) + " failures");
  }

  {  // parallelism and orthogonality equivalences: 500 random, 100 parallel, 100 orthogonal pairs
    bool ok = true;
    std::string what;
    for (const char* name : {"rel3", "rel4", "rel5"}) {
      const Report r = run_scenario(es, name, kSeed, 700);
      ok = ok && r.passed();
      what += (what.empty() ? "" : "; ") + summary(r);
    }
    line(4, ok, "equivalences on 700 pairs: " + what);
  }

  {  // spreads and reguli
    bool ok = true;
    std::string what;
    for (auto [name, trials] : {std::pair{"rel6", 400}, {"rel7", 400}, {"rel8", 400}, {"rel9", 200}}) {
      const Report r = run_scenario(es, name, kSeed, trials);
      ok = ok && r.passed();
      what += (what.empty() ? "" : "; ") + summary(r);
    }
    line(5, ok, "spread/regulus suite (100 points per spread, 20x20 reguli): " + what);
  }

  {  // propositions over the reflection family, and total suite time
    const auto t0 = Clock::now();
    const std::vector<Report> all = run_all(es, kSeed, kDefaultTrials);
    const double dt = seconds_since(t0);
    bool ok = true;
    std::size_t props = 0;
    std::string bad;
    for (const Report& r : all) {
      if (r.scenario.rfind("prop", 0) == 0) ++props;
      if (!r.passed()) {
        ok = false;
        bad += " " + summary(r);
      }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "full suite at %zu trials: %zu scenarios (%zu propositions), %.2f s (limit 60 s)",
                  kDefaultTrials, all.size(), props, dt);
    line(6, ok && props == 12 && dt < 60.0, buf + bad);
  }

  {  // negative controls
    const Report table = check_condition(es, perturbed_identity(), ConditionMode::Forward, kDefaultTrials, kSeed);
    const PlaneMap zeta = PlaneMap::from_matrix(Side::Left, Mat::identity(3));
    const PlaneMap shear = PlaneMap::from_matrix(Side::Right, Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    const AdmissibilityReport adm = admissible_check(es, zeta, shear, kDefaultTrials, kSeed);
    const bool ok = !table.passed() && !table.violations.front().witness.empty() && !adm.compatible.passed();
    line(7, ok,
         "negative controls: table map flagged (" + (table.violations.empty() ? std::string("not flagged")
                                                                                : table.violations.front().witness) +
             "); sheared map of E_R flagged by polarity compatibility (" +
             (adm.compatible.violations.empty() ? std::string("not flagged") : adm.compatible.violations.front().witness) + ")");
  }

  {  // theorem smoke tests
    const Report t1 = run_scenario(es, "thm1_smoke", kSeed, kDefaultTrials);
    const Report t2 = run_scenario(es, "thm2_smoke", kSeed, kDefaultTrials);
    line(8, t1.passed() && t2.passed(), "theorem smoke tests: " + summary(t1) + "; " + summary(t2));
  }

  return failures == 0 ? 0 : 1;
}
