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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace klein3 {

struct Violation {
  std::size_t trial = 0;
  std::string witness;
  std::string expected;
  std::string actual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class Status { Pass, Fail, Inconclusive };

// Outcome of one named check run. status() is Pass iff there are no
// violations and no inconclusive oracle outcomes.
struct Report {
  std::string scenario;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<Violation> violations;
  std::size_t inconclusive = 0;
  // True when the verdict rests on an exact matrix identity as well as on
  // samples.
  bool exact = false;

  Report() = default;
  Report(std::string name, std::uint64_t seed_, std::size_t trials_)
      : scenario(std::move(name)), seed(seed_), trials(trials_) {}

  Status status() const;
  bool passed() const { return status() == Status::Pass; }

  void fail(std::size_t trial, std::string witness, std::string expected, std::string actual);
  // Appends another report's findings (violations keep their trial indices).
  void absorb(const Report& other);
  // Orders violations by trial index; stable for equal indices.
  void sort_violations();

  friend bool operator==(const Report&, const Report&) = default;
};

const char* status_name(Status s);
std::string to_text(const Report& r);

void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);

}  // namespace klein3
