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
#include <map>
#include <optional>
#include <string>

#include "inose/elliptic.hpp"
#include "inose/isogeny.hpp"
#include "inose/ratfunc.hpp"

namespace inose {

using FunctionCurve = WeierstrassCurve<RatFunc>;
using Section = CurvePoint<RatFunc>;

// A, B and the two discriminants attached to a pair of monic cubics.
struct InoseData {
  NFElement A, B, D1, D2;
};

InoseData invariants_from_cubics(const UPoly& f1, const UPoly& f2);
InoseData invariants_from_family(const ThreeIsogenyFamily& fam);

// Y^2 = X^3 - A/3 X + (D1 v^n + B + D2 / v^n)/64 in the base variable v,
// followed by the recorded normalization: v = mu * v' and
// (X, Y) -> (lambda^2 X, lambda^3 Y).
struct SurfaceModel {
  int n = 1;
  std::string var;
  FunctionCurve curve;
  NFElement lambda, mu;

  SurfaceModel lift_to(const FieldTower& tower) const;
};

SurfaceModel build_surface(const InoseData& data, int n, const std::optional<std::string>& var = std::nullopt);

// Applies v = mu * v' (v' named `newvar`) and then the (X, Y) scaling.
SurfaceModel normalize_surface(const SurfaceModel& s, const NFElement& lambda, const NFElement& mu,
                               const std::string& newvar);
// Moves a section of `from` to the model normalize_surface(from, lambda, mu, newvar).
Section normalize_section(const Section& p, const NFElement& lambda, const NFElement& mu,
                          const std::string& newvar);

// Homogeneous polynomial in (x1, x2, z) with coefficients in a tower.
class TernaryForm {
 public:
  using Exp = std::array<int, 3>;
  TernaryForm() = default;
  explicit TernaryForm(FieldTower tower) : tower_(std::move(tower)) {}
  static TernaryForm variable(const FieldTower& tower, int index);

  const std::map<Exp, NFElement>& terms() const { return terms_; }
  const FieldTower& tower() const { return tower_; }

  TernaryForm& operator+=(const TernaryForm& o);
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a += b * a.tower_.from_int(-1); }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const TernaryForm& a, const NFElement& c);

  // Evaluates at p with coefficients mapped through `embed`.
  template <class T, class Embed>
  T eval(const std::array<T, 3>& p, const T& zero, Embed&& embed) const {
    T acc = zero;
    for (const auto& [e, c] : terms_) {
      T m = embed(c);
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[v]; ++k) m = m * p[v];
      acc += m;
    }
    return acc;
  }

 private:
  FieldTower tower_;
  std::map<Exp, NFElement> terms_;
};

// Coefficients of the birational map from the cubic model to F^(6).
struct TransformPsi {
  NFElement a, ap;
  TernaryForm c6, c4, c2, c0, d10, d6, d4, d0;
};

TransformPsi build_psi(const ThreeIsogenyFamily& fam);

// The cubic C_u over tower(u), origin (1 : u^2 : 0).
PlaneCubicWithOrigin<RatFunc> build_cubic_model(const ThreeIsogenyFamily& fam, const FieldTower& tower);

// F^(6) from its closed form in u, cross-checked against build_surface(., 6).
FunctionCurve build_weier_f6(const ThreeIsogenyFamily& fam, const FieldTower& tower);

// Image of a point of C_u (coordinates in tower(u)).  Points where the
// denominator vanishes go to infinity; a 0/0 raises IndeterminateForm.
Section psi_apply(const TransformPsi& psi, const ProjPoint<RatFunc>& p);

// Exact identity: the pullback of the F^(6) equation lies in the ideal of C_u.
bool verify_psi(const ThreeIsogenyFamily& fam);

// The third intersection point of the tangent at O with C_u.
ProjPoint<RatFunc> obar_point(const ThreeIsogenyFamily& fam, const FieldTower& tower);

// P_Obar on F^(6).  Computed as Psi(O_w) + Psi(O_w^2), since O, O_w, O_w^2
// are collinear; `omega` must be a primitive cube root of unity in `tower`.
Section obar_section(const ThreeIsogenyFamily& fam, const FieldTower& tower, const NFElement& omega);

}  // namespace inose
