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

#include "klein3/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klein3 {

Status Report::status() const {
  if (!violations.empty()) return Status::Fail;
  if (inconclusive > 0) return Status::Inconclusive;
  return Status::Pass;
}

void Report::fail(std::size_t trial, std::string witness, std::string expected,
                  std::string actual) {
  violations.push_back({trial, std::move(witness), std::move(expected), std::move(actual)});
}

void Report::absorb(const Report& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  inconclusive += other.inconclusive;
  exact = exact || other.exact;
}

void Report::sort_violations() {
  std::stable_sort(violations.begin(), violations.end(),
                   [](const Violation& a, const Violation& b) { return a.trial < b.trial; });
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << r.scenario << ": " << status_name(r.status()) << " (seed " << r.seed << ", trials "
      << r.trials << ", violations " << r.violations.size() << ", inconclusive "
      << r.inconclusive << (r.exact ? ", exact" : "") << ")";
  for (const auto& v : r.violations) {
    out << "\n  trial " << v.trial << ": " << v.witness << "\n    expected: " << v.expected
        << "\n    actual:   " << v.actual;
  }
  return out.str();
}

void to_json(nlohmann::json& j, const Report& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) {
    violations.push_back(
        {{"trial", v.trial}, {"witness", v.witness}, {"expected", v.expected}, {"actual", v.actual}});
  }
  j = {{"scenario", r.scenario},
       {"seed", r.seed},
       {"trials", r.trials},
       {"status", status_name(r.status())},
       {"violations", violations},
       {"inconclusive", r.inconclusive},
       {"exact", r.exact}};
}

void from_json(const nlohmann::json& j, Report& r) {
  r = Report{};
  j.at("scenario").get_to(r.scenario);
  j.at("seed").get_to(r.seed);
  j.at("trials").get_to(r.trials);
  j.at("exact").get_to(r.exact);
  if (j.contains("inconclusive")) j.at("inconclusive").get_to(r.inconclusive);
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({v.at("trial").get<std::size_t>(), v.at("witness").get<std::string>(),
                            v.at("expected").get<std::string>(), v.at("actual").get<std::string>()});
  }
  if (j.at("status").get<std::string>() != status_name(r.status()))
    throw std::invalid_argument("report status field disagrees with its violations");
}

}  // namespace klein3
