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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "inose/mw_lattice.hpp"
#include "inose/section_solver.hpp"

namespace inose {

// One exact comparison.  `id` is stable across releases and is what
// --checks selects on.
struct CheckResult {
  std::string id;
  std::string description;
  bool pass = false;
  std::string detail;
};

struct NamedSection {
  std::string name;
  Section point;
  std::string provenance;
};

struct SurfaceRecord {
  std::string label;  // "F1" or "F2"
  SurfaceModel model;
  std::vector<KodairaFiber> fibers;
  std::vector<NamedSection> basis;
  Matrix<BigRational> gram;
  BigRational det;
};

struct ExampleReport {
  std::string name;
  std::string field;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<SurfaceRecord> surfaces;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  const CheckResult* find(const std::string& id) const;
};

// The three singular K3 surfaces X_[3,3,3], X_[3,2,3] and X_[3,0,3], with
// their towers and model rescalings fixed so that the published coordinates
// are reproduced exactly.
ExampleReport run_x333();
ExampleReport run_x323();
ExampleReport run_x303();
// "x333", "x323" or "x303"; ParseError otherwise.
ExampleReport run_named(const std::string& name);
const std::vector<std::string>& named_examples();

// The generic pipeline for E1: y^2 = x^3 + a(x - b)^2 over the tower of a.
ExampleReport run_family(const NFElement& a, const NFElement& b);

// A seeded spot check of the Gram matrix: picks basis sections Pi, Pj and
// small m, n, and compares the height of m Pi + n Pj with the quadratic form.
CheckResult random_combination_check(const SurfaceRecord& rec, std::uint64_t seed, const std::string& id);

// F^(1) for E1 and its quadratic twist by d, so j1 = j2.
SurfaceModel twisted_pair_surface(const Curve& E1, const NFElement& d);

}  // namespace inose
