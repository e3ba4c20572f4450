// Copyright 2026 The Inose-MWL Authors.
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


// inose-mwl: runs the named examples or the generic family and reports
// surfaces, sections, fibers, Gram matrices and the exact checks.
//
// Exit status: 0 when every selected check passes, 2 when one fails and 3
// on any error (bad arguments, arithmetic failure).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inose/errors.hpp"
#include "inose/named_examples.hpp"
#include "inose/serialization.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 2;
constexpr int kExitError = 3;

struct Options {
  std::string mode;
  std::string example;
  std::string a = "1", b = "1";
  std::string tower;
  std::vector<std::string> outputs{"text"};
  std::vector<std::string> checks;
  std::optional<std::uint64_t> seed;
  std::string json_path;
};

std::string read_tower_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::runtime_error("cannot read " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool selected(const std::string& id, const std::vector<std::string>& prefixes) {
  if (prefixes.empty()) return true;
  for (const auto& p : prefixes)
    if (id.compare(0, p.size(), p) == 0) return true;
  return false;
}

inose::ExampleReport run(const Options& opt) {
  if (opt.mode == "named") {
    if (opt.example.empty()) throw inose::MathError(inose::ErrorCode::ParseError, "run named needs an example name");
    return inose::run_named(opt.example);
  }
  if (opt.mode == "family") {
    const inose::FieldTower k = opt.tower.empty() ? inose::FieldTower::rationals()
                                                  : inose::tower_from_json(read_tower_arg(opt.tower));
    auto report = inose::run_family(inose::parse_element(k, opt.a), inose::parse_element(k, opt.b));
    report.name = "family(a = " + opt.a + ", b = " + opt.b + ")";
    return report;
  }
  throw inose::MathError(inose::ErrorCode::ParseError, "unknown mode '" + opt.mode + "' (named or family)");
}

int execute(const Options& opt) {
  inose::ExampleReport report = run(opt);
  if (opt.seed) {
    for (const auto& s : report.surfaces)
      if (!s.gram.empty())
        report.checks.push_back(inose::random_combination_check(
            s, *opt.seed, (opt.mode == "named" ? opt.example : std::string("family")) + "." + s.label + ".random"));
  }

  std::vector<inose::CheckResult> kept;
  for (const auto& c : report.checks)
    if (selected(c.id, opt.checks)) kept.push_back(c);
  for (const auto& p : opt.checks) {
    bool hit = false;
    for (const auto& c : kept) hit = hit || c.id.compare(0, p.size(), p) == 0;
    if (!hit) throw inose::MathError(inose::ErrorCode::ParseError, "no check matches '" + p + "'");
  }
  report.checks = std::move(kept);

  for (const auto& out : opt.outputs) {
    if (out == "text")
      std::cout << inose::report_to_text(report);
    else if (out == "json")
      std::cout << inose::report_to_json(report);
    else if (out == "latex-matrices")
      std::cout << inose::report_to_latex(report);
  }
  if (!opt.json_path.empty()) {
    std::ofstream f(opt.json_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + opt.json_path);
    f << inose::report_to_json(report);
  }

  int failed = 0;
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    ++failed;
    std::cerr << "check failed: " << c.id << ": " << c.description;
    if (!c.detail.empty()) std::cerr << " (" << c.detail << ")";
    std::cerr << "\n";
  }
  return failed ? kExitCheckFailure : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mordell-Weil lattices of Inose surfaces attached to 3-isogenous elliptic curves"};
  app.require_subcommand(1);
  Options opt;

  auto* cmd = app.add_subcommand("run", "Run a named example or the generic family");
  cmd->add_option("mode,--mode", opt.mode, "named or family")->check(CLI::IsMember({"named", "family"}));
  cmd->add_option("example", opt.example, "x333, x323 or x303 (named mode)");
  cmd->add_option("--a", opt.a, "Family parameter a, as an expression in the tower generators");
  cmd->add_option("--b", opt.b, "Family parameter b");
  cmd->add_option("--tower", opt.tower, "Base field as tower JSON, or @file");
  cmd->add_option("--outputs", opt.outputs, "text, json and/or latex-matrices")
      ->delimiter(',')
      ->check(CLI::IsMember({"text", "json", "latex-matrices"}));
  cmd->add_option("--checks", opt.checks, "Keep only checks whose id starts with one of these")->delimiter(',');
  cmd->add_option("--seed", opt.seed, "Add a seeded random height spot check per Gram matrix");
  cmd->add_option("--json", opt.json_path, "Also write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    return execute(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
