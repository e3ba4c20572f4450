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

#include <string>

#include "inose/inose_construct.hpp"
#include "inose/isogeny.hpp"
#include "inose/named_examples.hpp"

namespace inose {

// JSON forms of the core objects.  Rationals are written as [num, den]
// string pairs so that big integers survive any JSON reader.  Malformed
// input raises MathError(ParseError).

// [{"name": g, "minpoly": [coeff, ...]}, ...], ascending coefficients over
// the previous step.  On input a coefficient may also be a string such as
// "1 - r2", read in the previous step's field.
std::string tower_to_json(const FieldTower& tower);
FieldTower tower_from_json(const std::string& text);

// {"tower": ..., "coeffs": [[num, den], ...]}
std::string element_to_json(const NFElement& x);
NFElement element_from_json(const std::string& text);

// {"var": v, "coeffs": [...]} and {"num": ..., "den": ...}; coefficients
// are coordinate lists over `tower`.
std::string poly_to_json(const UPoly& p);
UPoly poly_from_json(const std::string& text, const FieldTower& tower);
std::string ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const std::string& text, const FieldTower& tower);

// {"field": tower, "a1": ..., ..., "a6": ...}
std::string curve_to_json(const Curve& e);
Curve curve_from_json(const std::string& text);

// {"inf": true} or {"X": ratfunc, "Y": ratfunc}
std::string section_to_json(const Section& p);
Section section_from_json(const std::string& text, const FieldTower& tower);

// {"n", "variable", "curve": {"field", "a1".."a6"}, "rescale": {"lambda", "mu"}}
std::string surface_to_json(const SurfaceModel& s);
SurfaceModel surface_from_json(const std::string& text);

// {"a", "b", "E1", "E2", "phi_x", "phi_y"}
std::string family_to_json(const ThreeIsogenyFamily& fam);

// Deterministic: the same report always serializes to the same bytes, so
// run times are left out.
std::string report_to_json(const ExampleReport& report);
// Human-readable summary, including the run time.
std::string report_to_text(const ExampleReport& report);
// Each Gram matrix as a LaTeX pmatrix with the common denominator pulled out.
std::string report_to_latex(const ExampleReport& report);

}  // namespace inose
