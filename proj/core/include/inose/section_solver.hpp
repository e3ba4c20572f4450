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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inose/inose_construct.hpp"
#include "inose/isogeny.hpp"

namespace inose {

enum class Sign { Plus, Minus };

// p(x1, 1) = x1^3 + 4ab x1 - 8ab^2 -+ u^3 x1^3 over tower(u), variable x1.
Poly<RatFunc> isogeny_divisor_form(const ThreeIsogenyFamily& fam, Sign sign, const FieldTower& tower);

// c1 x1^2 + c2 x1 x2 + c3 x2^2 + c4 x1 z + c5 x2 z + c6 z^2, scaled so the
// first nonzero coefficient is 1.
struct ConicCoeffs {
  std::array<RatFunc, 6> c;
};

// Tangent to C_u at O and through the three points over the roots of the
// divisor form.  DegenerateSystem unless the solution space is a line.
ConicCoeffs solve_conic(const ThreeIsogenyFamily& fam, Sign sign, const FieldTower& tower);

// The residual intersection of the conic with C_u, as (x1 : x2 : 1).
ProjPoint<RatFunc> sixth_point(const ThreeIsogenyFamily& fam, Sign sign, const ConicCoeffs& conic,
                               const FieldTower& tower);

// Psi applied to the sixth point: P+ or P- on F^(6) over tower(u).
Section phi_point(const ThreeIsogenyFamily& fam, Sign sign, const FieldTower& tower);

struct DescendedSection {
  SurfaceModel surface;
  Section point;
  std::string provenance;
};

// P+ - P- rewritten in s = u^6, on build_surface(data, 1).
DescendedSection section_F1(const ThreeIsogenyFamily& fam);
// P+ - P_Obar rewritten in t = u^3, on build_surface(data, 2).
DescendedSection section_F2(const ThreeIsogenyFamily& fam);

// Closed forms for the two sections above, over the family's tower.
Section closed_form_F1(const ThreeIsogenyFamily& fam);
Section closed_form_F2(const ThreeIsogenyFamily& fam);

// Psi(alpha_i : beta_j : 1) - Psi(alpha_1 : beta_1 : 1) in t = u^3 on
// F^(2) over the two-torsion tower, for each requested (i, j) (1-based).
std::vector<DescendedSection> sections_Rij(const ThreeIsogenyFamily& fam, const TwoTorsionData& tt,
                                           const std::vector<std::pair<int, int>>& pairs);

// Extra geometry composed with a coefficient automorphism:
// (X, Y, v) -> (x_mul X(v'), y_mul Y(v')) with v' = base_image.
struct SurfaceMap {
  std::optional<RatFunc> base_image;
  std::optional<NFElement> x_mul, y_mul;
};

// Applies `sigma` coefficient-wise, then `map`; ImageOffCurve unless the
// result lies on `target`.
DescendedSection galois_image(const DescendedSection& sec, const FieldAutomorphism& sigma,
                              const SurfaceModel& target, const SurfaceMap& map = {});

// True when every coefficient of f lies in `base`; then replaces f by its
// projection.
bool try_project(RatFunc& f, const FieldTower& base);

}  // namespace inose
