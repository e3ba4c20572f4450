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

#include "inose/inose_construct.hpp"

namespace inose {

namespace {

RatFunc constant_in(const FieldTower& t, const std::string& var, const NFElement& c) {
  return RatFunc::constant(t, var, c.lift_to(t));
}

// Pads an ascending coefficient list of a monic cubic: (a6, a4, a2).
std::array<NFElement, 3> cubic_coeffs(const UPoly& f) {
  if (f.degree() != 3 || !f.lead().is_one()) fail(ErrorCode::SingularInput, "expected a monic cubic");
  return {f.coeffs()[0], f.coeffs()[1], f.coeffs()[2]};
}

NFElement disc16(const NFElement& a2, const NFElement& a4, const NFElement& a6) {
  return (a2 * a2 * a4 * a4 - a2 * a2 * a2 * a6 * BigRational(4) + a2 * a4 * a6 * BigRational(18) -
          a4 * a4 * a4 * BigRational(4) - a6 * a6 * BigRational(27)) *
         BigRational(16);
}

}  // namespace

InoseData invariants_from_cubics(const UPoly& f1, const UPoly& f2) {
  const FieldTower t = f1.ctx().num_steps() >= f2.ctx().num_steps() ? f1.ctx() : f2.ctx();
  auto [a6, a4, a2] = cubic_coeffs(lift_poly(f1, t));
  auto [b6, b4, b2] = cubic_coeffs(lift_poly(f2, t));
  InoseData d{
      (a2 * a2 - a4 * BigRational(3)) * (b2 * b2 - b4 * BigRational(3)),
      (a2 * a2 * a2 * BigRational(2) - a2 * a4 * BigRational(9) + a6 * BigRational(27)) *
          (b2 * b2 * b2 * BigRational(2) - b2 * b4 * BigRational(9) + b6 * BigRational(27)) * BigRational(32, 27),
      disc16(a2, a4, a6), disc16(b2, b4, b6)};
  if (d.D1.is_zero() || d.D2.is_zero()) fail(ErrorCode::SingularInput, "cubic with vanishing discriminant");
  return d;
}

InoseData invariants_from_family(const ThreeIsogenyFamily& fam) {
  return invariants_from_cubics(cubic_rhs(fam.E1, "x"), cubic_rhs(fam.E2, "x"));
}

SurfaceModel build_surface(const InoseData& data, int n, const std::optional<std::string>& var) {
  if (n < 1 || n > 6) fail(ErrorCode::UnsupportedN, "F^(n) is only built for 1 <= n <= 6");
  const std::string v = var ? *var : (n == 1 ? "s" : n == 2 ? "t" : n == 6 ? "u" : "s");
  const FieldTower& t = data.A.tower();
  const RatFunc x = RatFunc::variable(t, v);
  const RatFunc a4 = constant_in(t, v, data.A * BigRational(-1, 3));
  const RatFunc xn = x.pow(n);
  const RatFunc a6 = (xn * data.D1 + constant_in(t, v, data.B) + xn.inverse() * data.D2) * t.from_rational(BigRational(1, 64));
  const RatFunc zero(t, v);
  return SurfaceModel{n, v, FunctionCurve(zero, zero, zero, a4, a6), t.one(), t.one()};
}

SurfaceModel SurfaceModel::lift_to(const FieldTower& tower) const {
  const RatFunc zero(tower, var);
  return SurfaceModel{n, var,
                      FunctionCurve(zero, zero, zero, curve.a4().lift_to(tower), curve.a6().lift_to(tower)),
                      lambda.lift_to(tower), mu.lift_to(tower)};
}

SurfaceModel normalize_surface(const SurfaceModel& s, const NFElement& lambda, const NFElement& mu,
                               const std::string& newvar) {
  const FieldTower& t = s.curve.a6().tower();
  const RatFunc image = RatFunc::variable(t, newvar) * mu.lift_to(t);
  const RatFunc zero(t, newvar);
  const FunctionCurve moved(zero, zero, zero, substitute(s.curve.a4(), image), substitute(s.curve.a6(), image));
  const RatFunc l = constant_in(t, newvar, lambda);
  return SurfaceModel{s.n, newvar, moved.rescaled(l), s.lambda.lift_to(t) * lambda.lift_to(t),
                      s.mu.lift_to(t) * mu.lift_to(t)};
}

Section normalize_section(const Section& p, const NFElement& lambda, const NFElement& mu,
                          const std::string& newvar) {
  if (p.is_infinity()) return p;
  const FieldTower& t = p.x().tower();
  const RatFunc image = RatFunc::variable(t, newvar) * mu.lift_to(t);
  const Section moved = Section::affine(substitute(p.x(), image), substitute(p.y(), image));
  return FunctionCurve::rescale_point(moved, constant_in(t, newvar, lambda));
}

// ------------------------------------------------------------ forms

TernaryForm TernaryForm::variable(const FieldTower& tower, int index) {
  TernaryForm f(tower);
  Exp e{0, 0, 0};
  e[index] = 1;
  f.terms_.emplace(e, tower.one());
  return f;
}

TernaryForm& TernaryForm::operator+=(const TernaryForm& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm r(a.tower_);
  for (const auto& [e1, c1] : a.terms_)
    for (const auto& [e2, c2] : b.terms_) {
      TernaryForm m(a.tower_);
      m.terms_.emplace(TernaryForm::Exp{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
      r += m;
    }
  return r;
}

TernaryForm operator*(const TernaryForm& a, const NFElement& c) {
  TernaryForm r(a.tower_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, v * c);
  return r;
}

TransformPsi build_psi(const ThreeIsogenyFamily& fam) {
  const FieldTower& t = fam.tower;
  const NFElement &a = fam.a, &b = fam.b, &ap = fam.ap, &bp = fam.bp;
  const TernaryForm x1 = TernaryForm::variable(t, 0), x2 = TernaryForm::variable(t, 1),
                    z = TernaryForm::variable(t, 2);
  const TernaryForm L1 = x1 * t.from_int(3) + z * a;
  const TernaryForm L2 = x2 * t.from_int(3) + z * ap;
  const NFElement e1 = a + b * BigRational(6), e2 = ap + bp * BigRational(6);
  const NFElement s1 = a + b * BigRational(3), s2 = ap + bp * BigRational(3);
  const NFElement g1 = s1 * s1 * BigRational(3) - a * a, g2 = s2 * s2 * BigRational(3) - ap * ap;
  const TernaryForm Q1 = L1 * L1 + z * z * (a * e1 * BigRational(2));
  const TernaryForm Q2 = L2 * L2 + z * z * (ap * e2 * BigRational(2));
  const NFElement cross = a * ap * e1 * e2 * BigRational(6);
  TransformPsi p{a, ap, {}, {}, {}, {}, {}, {}, {}, {}};
  p.c6 = L1 * (a * e1 * BigRational(2)) - z * (a * g1);
  p.c4 = L2 * (a * e1);
  p.c2 = L1 * (-(ap * e2));
  p.c0 = L2 * (ap * e2 * BigRational(-2)) + z * (ap * g2);
  p.d10 = Q1 * (-(a * g1)) + L1 * z * (a * a * e1 * e1 * BigRational(6));
  p.d6 = Q2 * (a * g1) - L1 * z * cross;
  p.d4 = Q1 * (ap * g2) - L2 * z * cross;
  p.d0 = Q2 * (-(ap * g2)) + L2 * z * (ap * ap * e2 * e2 * BigRational(6));
  return p;
}

PlaneCubicWithOrigin<RatFunc> build_cubic_model(const ThreeIsogenyFamily& fam, const FieldTower& tower) {
  const std::string u = "u";
  auto c = [&](const NFElement& v) { return constant_in(tower, u, v); };
  const RatFunc u6 = RatFunc::variable(tower, u).pow(6);
  const NFElement &a = fam.a, &b = fam.b, &ap = fam.ap, &bp = fam.bp;
  using T = PlaneCubicWithOrigin<RatFunc>::Term;
  std::vector<T> terms{
      {{0, 3, 0}, c(tower.one())},
      {{0, 2, 1}, c(ap)},
      {{0, 1, 2}, c(ap * bp * BigRational(-2))},
      {{0, 0, 3}, c(ap * bp * bp) - u6 * c(a * b * b)},
      {{3, 0, 0}, -u6},
      {{2, 0, 1}, -u6 * c(a)},
      {{1, 0, 2}, u6 * c(a * b * BigRational(2))},
  };
  const RatFunc uu = RatFunc::variable(tower, u);
  ProjPoint<RatFunc> origin{c(tower.one()), uu * uu, RatFunc(tower, u)};
  return PlaneCubicWithOrigin<RatFunc>(std::move(terms), std::move(origin));
}

FunctionCurve build_weier_f6(const ThreeIsogenyFamily& fam, const FieldTower& tower) {
  const NFElement &a = fam.a, &b = fam.b, &ap = fam.ap, &bp = fam.bp;
  const NFElement e1 = a + b * BigRational(6), e2 = ap + bp * BigRational(6);
  const NFElement s1 = a + b * BigRational(3), s2 = ap + bp * BigRational(3);
  const NFElement g1 = s1 * s1 * BigRational(3) - a * a, g2 = s2 * s2 * BigRational(3) - ap * ap;
  const NFElement k1 = a * a * b * b * b * (a * BigRational(4) + b * BigRational(27));
  const NFElement k2 = ap * ap * bp * bp * bp * (ap * BigRational(4) + bp * BigRational(27));
  const std::string v = "u";
  auto c = [&](const NFElement& x) { return constant_in(tower, v, x); };
  const RatFunc u6 = RatFunc::variable(tower, v).pow(6);
  const RatFunc a4 = c(a * ap * e1 * e2 * BigRational(-1, 3));
  const RatFunc a6 = (u6 * c(k1) + u6.inverse() * c(k2)) * tower.from_rational(BigRational(-1, 4)) +
                     c(a * ap * g1 * g2 * BigRational(1, 54));
  const RatFunc zero(tower, v);
  FunctionCurve closed(zero, zero, zero, a4, a6);
  const SurfaceModel general = build_surface(invariants_from_family(fam), 6, v).lift_to(tower);
  if (!(general.curve == closed))
    fail(ErrorCode::IndeterminateForm, "closed form of F^(6) disagrees with the general construction");
  return closed;
}

Section psi_apply(const TransformPsi& psi, const ProjPoint<RatFunc>& p) {
  const FieldTower& t = p[0].tower();
  const std::string& v = p[0].var();
  auto embed = [&](const NFElement& c) { return constant_in(t, v, c); };
  const RatFunc zero(t, v);
  const RatFunc u = RatFunc::variable(t, v);
  const RatFunc u2 = u * u;
  auto ev = [&](const TernaryForm& f) { return f.eval(p, zero, embed); };
  const RatFunc den = (p[0] * t.from_int(3) + p[2] * psi.a.lift_to(t)) * u2 -
                      (p[1] * t.from_int(3) + p[2] * psi.ap.lift_to(t));
  const RatFunc xn = ((ev(psi.c6) * u2 + ev(psi.c4)) * u2 + ev(psi.c2)) * u2 + ev(psi.c0);
  const RatFunc u4 = u2 * u2;
  const RatFunc yn = ev(psi.d10) * u4 * u4 * u2 + ev(psi.d6) * u4 * u2 + ev(psi.d4) * u4 + ev(psi.d0);
  if (den.is_zero()) {
    if (xn.is_zero() && yn.is_zero()) fail(ErrorCode::IndeterminateForm, "Psi is 0/0 at this point");
    return Section::infinity();
  }
  const RatFunc x = xn / (u2 * den * t.from_int(3));
  const RatFunc y = yn / (u2 * u * den * den * t.from_int(6));
  return Section::affine(x, y);
}

bool verify_psi(const ThreeIsogenyFamily& fam) {
  using P0 = Poly<NFElement>;
  using P1 = Poly<P0>;
  using P2 = Poly<P1>;
  const FieldTower& t = fam.tower;
  const PolyCtx<NFElement> c0{t, "u"};
  const PolyCtx<P0> c1{c0, "x1"};
  auto cst = [&](const NFElement& c) {
    return P2::constant(c1, "x2", P1::constant(c0, "x1", P0::constant(t, "u", c)));
  };
  const P2 u = P2::constant(c1, "x2", P1::constant(c0, "x1", P0::variable(t, "u")));
  const P2 x1 = P2::constant(c1, "x2", P1::variable(c0, "x1"));
  const P2 x2 = P2::variable(c1, "x2");
  const P2 one = cst(t.one());
  const TransformPsi psi = build_psi(fam);
  const std::array<P2, 3> pt{x1, x2, one};
  const P2 zero = cst(t.zero());
  auto ev = [&](const TernaryForm& f) { return f.eval(pt, zero, cst); };
  const P2 u2 = u * u, u4 = u2 * u2, u6 = u4 * u2;
  const P2 D = (x1 * cst(t.from_int(3)) + cst(fam.a)) * u2 - (x2 * cst(t.from_int(3)) + cst(fam.ap));
  const P2 Xn = ((ev(psi.c6) * u2 + ev(psi.c4)) * u2 + ev(psi.c2)) * u2 + ev(psi.c0);
  const P2 Yn = ev(psi.d10) * u6 * u4 + ev(psi.d6) * u6 + ev(psi.d4) * u4 + ev(psi.d0);
  const NFElement &a = fam.a, &b = fam.b, &ap = fam.ap, &bp = fam.bp;
  const NFElement e1 = a + b * BigRational(6), e2 = ap + bp * BigRational(6);
  const NFElement s1 = a + b * BigRational(3), s2 = ap + bp * BigRational(3);
  const NFElement g1 = s1 * s1 * BigRational(3) - a * a, g2 = s2 * s2 * BigRational(3) - ap * ap;
  const NFElement k1 = a * a * b * b * b * (a * BigRational(4) + b * BigRational(27));
  const NFElement k2 = ap * ap * bp * bp * bp * (ap * BigRational(4) + bp * BigRational(27));
  const NFElement a4 = a * ap * e1 * e2 * BigRational(-1, 3);
  // u^6 a6.
  const P2 a6u = (u6 * u6 * cst(k1) + cst(k2)) * cst(t.from_rational(BigRational(-1, 4))) +
                 u6 * cst(a * ap * g1 * g2 * BigRational(1, 54));
  const P2 D2 = D * D, D3 = D2 * D;
  const P2 N = (Yn * Yn * cst(t.from_int(3)) - Xn * Xn * Xn * D * cst(t.from_int(4))) * u6 -
               u4 * D3 * Xn * u6 * cst(a4 * BigRational(36)) - u6 * D3 * D * a6u * cst(t.from_int(108));
  const P2 Cu = x2 * x2 * x2 + (x2 - cst(bp)) * (x2 - cst(bp)) * cst(ap) -
                u6 * (x1 * x1 * x1 + (x1 - cst(b)) * (x1 - cst(b)) * cst(a));
  return rem_monic(N, Cu).is_zero();
}

ProjPoint<RatFunc> obar_point(const ThreeIsogenyFamily& fam, const FieldTower& tower) {
  const auto cubic = build_cubic_model(fam, tower);
  ProjPoint<RatFunc> p = cubic.tangent_and_third(cubic.origin()).third;
  if (!p[2].is_zero()) {
    const RatFunc zi = p[2].inverse();
    for (auto& c : p) c = c * zi;
  }
  return p;
}

Section obar_section(const ThreeIsogenyFamily& fam, const FieldTower& tower, const NFElement& omega) {
  const NFElement w = omega.lift_to(tower);
  if (!(w * w * w).is_one() || w.is_one()) fail(ErrorCode::InvalidAutomorphism, "omega is not a primitive cube root of 1");
  const TransformPsi psi = build_psi(fam);
  const FunctionCurve f6 = build_weier_f6(fam, tower);
  const RatFunc u = RatFunc::variable(tower, "u");
  const RatFunc one = RatFunc::constant(tower, "u", 1), zero(tower, "u");
  const Section p1 = psi_apply(psi, {one, u * u * (w * w), zero});
  const Section p2 = psi_apply(psi, {one, u * u * w, zero});
  return f6.add(p1, p2);
}

}  // namespace inose
