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

// Isotropy of diagonal rational quadratic forms, decided locally
// (Hasse-Minkowski) from Hilbert symbols.

#pragma once

#include <optional>
#include <vector>

#include "klein3/linalg.hpp"

namespace klein3 {

// Distinct prime factors of |n| (n != 0), or nullopt when Pollard rho runs out
// of budget on a composite cofactor.
std::optional<std::vector<mpz_class>> prime_factors(mpz_class n, long budget = 200000);

// Hilbert symbol (a, b)_p of nonzero integers at a prime p.
int hilbert_symbol(const mpz_class& a, const mpz_class& b, const mpz_class& p);

// Does sum d_i y_i^2 = 0 have a nonzero rational solution? All d_i must be
// nonzero. nullopt only when factoring a coefficient failed.
std::optional<bool> is_isotropic(const Vec& d);

}  // namespace klein3
