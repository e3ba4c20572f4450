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

#include <vector>

#include "inose/elliptic.hpp"
#include "inose/number_field.hpp"
#include "inose/ratfunc.hpp"

namespace inose {

using Curve = WeierstrassCurve<NFElement>;

// phi(x, y) = (phi_x(x), phi_y(x) * y), both in the variable x1.
struct IsogenyMap {
  RatFunc phi_x;
  RatFunc phi_y;
};

// E1: y^2 = x^3 + a(x - b)^2 and its quotient E2 by <(0, b sqrt(a))>,
// E2: y^2 = x^3 + a'(x - b')^2 with a' = -3a, b' = (4a + 27b)/9.
struct ThreeIsogenyFamily {
  FieldTower tower;
  NFElement a, b, ap, bp;
  Curve E1, E2;
  IsogenyMap phi;
};

ThreeIsogenyFamily build_family(const NFElement& a, const NFElement& b);

struct J0Isogeny {
  Curve E, quotient;
  IsogenyMap phi;
};

// y^2 = x^3 + d modulo <(0, sqrt(d))>.
J0Isogeny build_j0(const NFElement& d);

// True when phi_y^2 f1 = f2(phi_x) identically (curves with a1 = a3 = 0).
bool verify_isogeny(const Curve& E1, const Curve& E2, const IsogenyMap& phi);

// Roots alpha_i of x^3 + a(x - b)^2 and beta_i = phi_x(alpha_i), all in `tower`.
struct TwoTorsionData {
  FieldTower tower;
  std::vector<NFElement> alphas, betas;
};

// Splits the 2-division cubic over `base` (which must extend the family's
// tower), adjoining a cubic root and then a square root only when needed.
TwoTorsionData two_torsion(const ThreeIsogenyFamily& fam, const FieldTower& base);
TwoTorsionData two_torsion(const ThreeIsogenyFamily& fam);

// Right-hand side x^3 + a2 x^2 + a4 x + a6 of a curve with a1 = a3 = 0.
UPoly cubic_rhs(const Curve& E, const std::string& var);

}  // namespace inose
