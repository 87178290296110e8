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

// klein3: queries on lines of an elliptic 3-space and the verification suite.
//
// Exit codes: 0 success, 1 a verification report did not pass, 2 bad input,
// 3 the form does not give a classical elliptic space.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "klein3/clifford.hpp"
#include "klein3/io.hpp"
#include "klein3/linemaps.hpp"
#include "klein3/verify.hpp"

using json = nlohmann::ordered_json;
using namespace klein3;

namespace {

json fractions(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json line_json(const Line& a) { return fractions(a.pluecker()); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

Side parse_side(const std::string& s) {
  if (s == "L" || s == "l" || s == "left") return Side::Left;
  if (s == "R" || s == "r" || s == "right") return Side::Right;
  throw std::invalid_argument("side must be L or R, got '" + s + "'");
}

struct Options {
  std::string form;
  std::uint64_t seed = 1;
  std::size_t trials = kDefaultTrials;
  bool json = false;
};

// Tuples of fractions print as "(a,b,..)"; lists of tuples one per line.
std::string text_of(const json& v, int depth = 0) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  const bool flat = v.empty() || v[0].is_string();
  std::string out = flat ? "(" : "";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (flat) {
      out += (i ? "," : "") + text_of(v[i], depth + 1);
    } else {
      out += (depth == 0 ? "\n  " : (i ? " " : "")) + text_of(v[i], depth + 1);
    }
  }
  return flat ? out + ")" : out;
}

// Prints `result` as JSON or as "key: value" lines.
void emit(const Options& o, const json& result) {
  if (o.json) {
    std::cout << result.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : result.items()) {
    const std::string text = text_of(value);
    std::cout << key << (text.starts_with("\n") ? ":" : ": ") << text << "\n";
  }
}

EllipticSpace load_space(const Options& o) {
  if (o.form.empty()) return EllipticSpace::standard();
  const Mat m = load_form_file(o.form);
  const ClassicalityReport cr = classicality_report(m);
  if (!cr.classical()) {
    std::cerr << "form is not classical: " << cr.reason << "\n" << cr.str() << "\n";
    std::exit(3);
  }
  return EllipticSpace(Polarity(m));
}

int run_verify(const Options& o, const EllipticSpace& es, const std::string& name) {
  std::vector<Report> reports;
  if (name == "all") {
    reports = run_all(es, o.seed, o.trials);
  } else {
    reports.push_back(run_scenario(es, name, o.seed, o.trials));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (o.json) {
    std::cout << nlohmann::json(reports).dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << to_text(r) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"klein3: line geometry of an elliptic 3-space"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--form", o.form, "form matrix file (default: identity)");
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--trials", o.trials, "trials per check");
  app.add_flag("--json", o.json, "JSON output");

  std::string a_text, b_text, p_text, side_text = "L", scenario = "all", matrix_file;
  std::vector<std::string> centers;
  bool perturbed = false;
  int members = 5;

  auto* polar = app.add_subcommand("polar", "polar line a^pi");
  polar->add_option("line", a_text)->required();
  auto* klein = app.add_subcommand("klein", "Klein image, its projections and the polar");
  klein->add_option("line", a_text)->required();
  auto* relate = app.add_subcommand("relate", "orthogonality and parallelism of two lines");
  relate->add_option("a", a_text)->required();
  relate->add_option("b", b_text)->required();
  auto* par = app.add_subcommand("parallel", "left, right and Clifford parallelism");
  par->add_option("a", a_text)->required();
  par->add_option("b", b_text)->required();
  auto* spread = app.add_subcommand("spread-line", "member of S_side(base) through a point");
  spread->add_option("base", a_text)->required();
  spread->add_option("point", p_text)->required();
  spread->add_option("--side", side_text, "L or R");
  auto* regulus = app.add_subcommand("regulus", "members of R_side(base|transversal)");
  regulus->add_option("base", a_text)->required();
  regulus->add_option("transversal", b_text)->required();
  regulus->add_option("--side", side_text, "L or R");
  regulus->add_option("--count", members, "number of members")->check(CLI::Range(1, 100));
  auto* perp = app.add_subcommand("perp", "common perpendiculars of two meeting lines");
  perp->add_option("first", a_text)->required();
  perp->add_option("second", b_text)->required();
  auto* reflect = app.add_subcommand("reflect", "image of a line under the reflection at a point");
  reflect->add_option("center", p_text)->required();
  reflect->add_option("line", a_text)->required();
  auto* classify_cmd = app.add_subcommand("classify", "direct, opposite or neither");
  classify_cmd->add_option("--center", centers, "reflection centre, applied in the order given");
  classify_cmd->add_option("--matrix", matrix_file, "4x4 collineation matrix file");
  classify_cmd->add_flag("--perturbed", perturbed, "identity with two lines swapped");
  auto* verify = app.add_subcommand("verify", "run a scenario or all of them");
  verify->add_option("scenario", scenario, "scenario name or 'all'");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    const EllipticSpace es = load_space(o);
    if (*verify) {
      if (scenario != "all" && !is_scenario(scenario)) {
        std::cerr << "unknown scenario '" << scenario << "'\n";
        return 2;
      }
      return run_verify(o, es, scenario);
    }
    json result;
    if (*polar) {
      const Line a = parse_line_spec(a_text);
      result = {{"line", line_json(a)}, {"polar", line_json(es.polar(a))}};
    } else if (*klein) {
      const Line a = parse_line_spec(a_text);
      result = {{"pluecker", line_json(a)},
                {"omega", omega(a.pluecker()).get_str()},
                {"lambda", fractions(es.project_lambda(a.klein_point()).coords())},
                {"rho", fractions(es.project_rho(a.klein_point()).coords())},
                {"polar", line_json(es.polar(a))}};
    } else if (*relate) {
      const Line a = parse_line_spec(a_text), b = parse_line_spec(b_text);
      result = {{"ortho_intersect", yes_no(ortho_intersect(es, a, b))},
                {"related", yes_no(related(es, a, b))},
                {"left_parallel", yes_no(left_parallel(es, a, b))},
                {"right_parallel", yes_no(right_parallel(es, a, b))},
                {"parallel", yes_no(clifford_parallel(es, a, b))},
                {"transversals", transversal_count(es, a, b).str()}};
    } else if (*par) {
      const Line a = parse_line_spec(a_text), b = parse_line_spec(b_text);
      result = {{"left_parallel", yes_no(left_parallel(es, a, b))},
                {"right_parallel", yes_no(right_parallel(es, a, b))},
                {"parallel", yes_no(clifford_parallel(es, a, b))}};
    } else if (*spread) {
      const Spread sp(es, parse_line_spec(a_text), parse_side(side_text));
      result = {{"line", line_json(sp.line_through(es, parse_point(p_text)))}};
    } else if (*regulus) {
      const Regulus reg(es, Spread(es, parse_line_spec(a_text), parse_side(side_text)), parse_line_spec(b_text));
      json lines = json::array();
      lines.push_back(line_json(reg.member(es, 0, 1)));
      for (int j = 0; j + 1 < members; ++j) lines.push_back(line_json(reg.member(es, 1, j)));
      result = {{"members", lines}};
    } else if (*perp) {
      const auto [p1, p2] = common_perpendicular(es, parse_line_spec(a_text), parse_line_spec(b_text));
      result = {{"perpendiculars", json::array({line_json(p1), line_json(p2)})}};
    } else if (*reflect) {
      const LineMap m = LineMap::reflection(es, parse_point(p_text));
      result = {{"image", line_json(m.apply(parse_line_spec(a_text)))}};
    } else if (*classify_cmd) {
      LineMap phi = LineMap::identity();
      if (!matrix_file.empty()) phi = LineMap::collineation(load_matrix_file(matrix_file), matrix_file);
      for (const auto& c : centers) phi = LineMap::compose(phi, LineMap::reflection(es, parse_point(c)));
      if (perturbed) phi = perturbed_identity();
      const Classification c = classify(es, phi, o.trials, o.seed);
      json witness = json::array();
      for (const auto& [x, y] : c.witness) witness.push_back(json::array({line_json(x), line_json(y)}));
      result = {{"map", phi.label()},
                {"kind", classification_name(c.kind)},
                {"exact", yes_no(c.exact)},
                {"sampled", classification_name(c.sampled)}};
      if (!c.witness.empty()) result["witness"] = witness;
      if (!c.note.empty()) result["note"] = c.note;
    }
    emit(o, result);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
