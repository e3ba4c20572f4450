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

#include "inose/isogeny.hpp"

#include "inose/roots.hpp"

namespace inose {

namespace {

Curve make_curve(const NFElement& a2, const NFElement& a4, const NFElement& a6) {
  const NFElement z = a6.tower().zero();
  try {
    return Curve(z, a2, z, a4, a6);
  } catch (const MathError& e) {
    if (e.code() == ErrorCode::SingularCurve) fail(ErrorCode::SingularMember, "family member is singular");
    throw;
  }
}

// x^3 + a(x - b)^2 as a curve.
Curve isogeny_normal_form(const NFElement& a, const NFElement& b) {
  return make_curve(a, -(a * b) * BigRational(2), a * b * b);
}

}  // namespace

UPoly cubic_rhs(const Curve& E, const std::string& var) {
  const FieldTower& t = E.a6().tower();
  return UPoly(t, var, {E.a6(), E.a4(), E.a2(), t.one()});
}

ThreeIsogenyFamily build_family(const NFElement& a_in, const NFElement& b_in) {
  const FieldTower tower = a_in.tower().num_steps() >= b_in.tower().num_steps() ? a_in.tower() : b_in.tower();
  const NFElement a = a_in.lift_to(tower), b = b_in.lift_to(tower);
  if (a.is_zero()) fail(ErrorCode::SingularMember, "a = 0 gives a cuspidal curve");
  const NFElement ap = a * BigRational(-3);
  const NFElement bp = (a * BigRational(4) + b * BigRational(27)) * BigRational(1, 9);
  Curve E1 = isogeny_normal_form(a, b);
  Curve E2 = isogeny_normal_form(ap, bp);
  const std::string x = "x1";
  const NFElement ab = a * b, abb = ab * b;
  UPoly nx(tower, x, {abb * BigRational(12), ab * BigRational(-12), a * BigRational(4), tower.from_int(3)});
  UPoly dx = UPoly::monomial(tower, x, tower.from_int(3), 2);
  UPoly ny(tower, x, {abb * BigRational(8), ab * BigRational(-4), tower.zero(), tower.from_int(-1)});
  UPoly dy = UPoly::monomial(tower, x, tower.one(), 3);
  IsogenyMap phi{RatFunc(nx, dx), RatFunc(ny, dy)};
  return ThreeIsogenyFamily{tower, a, b, ap, bp, std::move(E1), std::move(E2), std::move(phi)};
}

J0Isogeny build_j0(const NFElement& d) {
  if (d.is_zero()) fail(ErrorCode::SingularMember, "d = 0 gives a cuspidal curve");
  const FieldTower& t = d.tower();
  const NFElement z = t.zero();
  Curve E = make_curve(z, z, d);
  Curve Q = make_curve(z, z, d * BigRational(-27));
  const std::string x = "x1";
  UPoly nx(t, x, {d * BigRational(4), z, z, t.one()});
  UPoly ny(t, x, {d * BigRational(-8), z, z, t.one()});
  IsogenyMap phi{RatFunc(nx, UPoly::monomial(t, x, t.one(), 2)), RatFunc(ny, UPoly::monomial(t, x, t.one(), 3))};
  return J0Isogeny{std::move(E), std::move(Q), std::move(phi)};
}

bool verify_isogeny(const Curve& E1, const Curve& E2, const IsogenyMap& phi) {
  if (!E1.a1().is_zero() || !E1.a3().is_zero() || !E2.a1().is_zero() || !E2.a3().is_zero()) return false;
  const FieldTower& t = phi.phi_x.tower();
  const std::string& x = phi.phi_x.var();
  const RatFunc f1(lift_poly(cubic_rhs(E1, x), t));
  const RatFunc& X = phi.phi_x;
  auto c = [&](const NFElement& v) { return RatFunc::constant(t, x, v); };
  const RatFunc rhs = ((X + c(E2.a2())) * X + c(E2.a4())) * X + c(E2.a6());
  return phi.phi_y * phi.phi_y * f1 == rhs;
}

TwoTorsionData two_torsion(const ThreeIsogenyFamily& fam) { return two_torsion(fam, fam.tower); }

TwoTorsionData two_torsion(const ThreeIsogenyFamily& fam, const FieldTower& base) {
  if (!base.extends(fam.tower)) fail(ErrorCode::TowerMismatch, "two_torsion base must extend the family tower");
  FieldTower tower = base;
  const UPoly g = lift_poly(cubic_rhs(fam.E1, "x"), tower);
  std::vector<NFElement> alphas;
  auto found = roots_in_tower(g);
  UPoly rest = g;
  if (found.size() == 3) {
    alphas = found;
  } else {
    NFElement r1 = tower.zero();
    if (found.empty()) {
      std::vector<NFElement> mp(g.coeffs().begin(), g.coeffs().end());
      tower = tower.extend("al", mp);
      r1 = tower.generator("al");
      rest = lift_poly(g, tower);
    } else {
      r1 = found.front();
    }
    const UPoly lin(tower, "x", {-r1, tower.one()});
    const UPoly quad = exact_div(rest, lin, "two_torsion");
    alphas.push_back(r1);
    auto more = roots_in_tower(quad);
    if (more.size() == 2) {
      alphas.push_back(more[0]);
      alphas.push_back(more[1]);
    } else {
      // quad = x^2 + p x + q; roots (-p +- sqrt(p^2 - 4q))/2.
      const NFElement p = quad.coeffs()[1], q = quad.coeffs()[0];
      const NFElement disc = p * p - q * BigRational(4);
      tower = tower.extend("sq", std::vector<NFElement>{-disc, tower.zero(), tower.one()});
      const NFElement sq = tower.generator("sq");
      const NFElement pl = p.lift_to(tower);
      for (auto& x : alphas) x = x.lift_to(tower);
      alphas.push_back((sq - pl) * BigRational(1, 2));
      alphas.push_back((-sq - pl) * BigRational(1, 2));
    }
  }
  TwoTorsionData out{tower, {}, {}};
  const RatFunc phx = fam.phi.phi_x.lift_to(tower);
  for (auto& x : alphas) {
    out.alphas.push_back(x.lift_to(tower));
    out.betas.push_back(phx.eval(out.alphas.back()));
  }
  return out;
}

}  // namespace inose
