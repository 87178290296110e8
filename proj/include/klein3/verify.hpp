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

// Named verification scenarios, one per relation and proposition, run on
// seeded samples and reported through Report.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klein3/linemaps.hpp"
#include "klein3/report.hpp"

namespace klein3 {

inline constexpr std::size_t kDefaultTrials = 200;

struct ScenarioInfo {
  std::string name;
  std::string checks;  // one line, for listings
  bool uses_map;       // runs over a family of line maps
};

// The coverage manifest, in run order.
const std::vector<ScenarioInfo>& scenario_registry();
bool is_scenario(const std::string& name);

// Reflections at E0 and at a seeded point, and two products of two
// reflections.
std::vector<LineMap> map_family(const EllipticSpace& es, std::uint64_t seed);

// The identity with (0,1,0,0,0,0) and (1,0,2,2,0,-1) exchanged.
LineMap perturbed_identity();

// phi itself when direct, phi followed by the reflection at E0 when opposite.
// Throws GeometryError when phi is neither.
LineMap direct_version(const EllipticSpace& es, const LineMap& phi, std::uint64_t seed);

// Deterministic for fixed (seed, trials). With `injected`, map scenarios use
// only that map and every scenario first checks the forward condition on
// it. Throws std::invalid_argument for unknown names.
Report run_scenario(const EllipticSpace& es, const std::string& name, std::uint64_t seed,
                    std::size_t trials = kDefaultTrials,
                    const std::optional<LineMap>& injected = std::nullopt);

std::vector<Report> run_all(const EllipticSpace& es, std::uint64_t seed,
                            std::size_t trials = kDefaultTrials);

}  // namespace klein3
