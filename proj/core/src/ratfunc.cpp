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

#include "inose/ratfunc.hpp"

namespace inose {

namespace {

bool is_one(const UPoly& p) { return p.degree() == 0 && p.lead().is_one(); }

}  // namespace

UPoly lift_poly(const UPoly& f, const FieldTower& target) {
  if (f.ctx().node() == target.node()) return f;
  std::vector<NFElement> c;
  for (const auto& x : f.coeffs()) c.push_back(x.lift_to(target));
  return UPoly(target, f.var(), std::move(c));
}

UPoly map_poly(const UPoly& f, const FieldAutomorphism& sigma) {
  std::vector<NFElement> c;
  for (const auto& x : f.coeffs()) c.push_back(sigma(x));
  return UPoly(sigma.tower(), f.var(), std::move(c));
}

RatFunc::RatFunc(FieldTower tower, std::string var)
    : num_(tower, var), den_(UPoly::constant(tower, var, tower.one())) {}

RatFunc::RatFunc(UPoly num)
    : num_(std::move(num)), den_(UPoly::constant(num_.ctx(), num_.var(), num_.ctx().one())) {}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = den_.one();
    return;
  }
  UPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  if (!den_.lead().is_one()) {
    const NFElement li = den_.lead().inverse();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc RatFunc::from_reduced(UPoly num, UPoly den) {
  if (num.is_zero()) return RatFunc(num.ctx(), num.var());
  if (!den.lead().is_one()) {
    const NFElement li = den.lead().inverse();
    num = num.scaled(li);
    den = den.scaled(li);
  }
  return RatFunc(std::move(num), std::move(den), Canonical{});
}

RatFunc RatFunc::constant(const FieldTower& tower, const std::string& var, const NFElement& c) {
  return RatFunc(UPoly::constant(tower, var, c.lift_to(tower)));
}

RatFunc RatFunc::variable(const FieldTower& tower, const std::string& var) {
  return RatFunc(UPoly::variable(tower, var));
}

NFElement RatFunc::constant_value() const {
  if (!is_constant()) fail(ErrorCode::NotInSubfield, "rational function is not constant");
  return num_.is_zero() ? tower().zero() : num_.lead();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) {
    UPoly n = a.num_ + b.num_;
    return RatFunc(std::move(n), a.den_, RatFunc::Canonical{});
  }
  if (b.is_polynomial())
    return RatFunc(a.num_ + b.num_ * a.den_, a.den_, RatFunc::Canonical{});
  if (a.is_polynomial())
    return RatFunc(b.num_ + a.num_ * b.den_, b.den_, RatFunc::Canonical{});
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  UPoly g = gcd(a.den_, b.den_);
  if (g.degree() == 0)
    return RatFunc::from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  UPoly ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
  UPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return RatFunc(a.tower(), a.var());
  UPoly g2 = gcd(num, g);
  UPoly den = ad * b.den_;
  if (g2.degree() > 0) {
    num = exact_div(num, g2);
    den = exact_div(den, g2);
  }
  return RatFunc::from_reduced(std::move(num), std::move(den));
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.is_constant()) return b * a.num_.lead();
  if (b.is_constant()) return a * b.num_.lead();
  UPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!is_one(bd)) {
    UPoly g = gcd(an, bd);
    if (g.degree() > 0) {
      an = exact_div(an, g);
      bd = exact_div(bd, g);
    }
  }
  if (!is_one(ad)) {
    UPoly g = gcd(bn, ad);
    if (g.degree() > 0) {
      bn = exact_div(bn, g);
      ad = exact_div(ad, g);
    }
  }
  return RatFunc::from_reduced(an * bn, ad * bd);
}

RatFunc operator*(const RatFunc& a, const NFElement& c) {
  if (c.is_zero()) return RatFunc(a.tower(), a.var());
  return RatFunc(a.num_.scaled(c.lift_to(a.tower())), a.den_, RatFunc::Canonical{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of the zero rational function");
  return from_reduced(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RatFunc(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)),
                 Canonical{});
}

NFElement RatFunc::eval(const NFElement& x) const {
  const NFElement d = den_.eval(x.lift_to(tower()));
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "evaluation at a pole");
  return num_.eval(x.lift_to(tower())) / d;
}

RatFunc RatFunc::lift_to(const FieldTower& target) const {
  return RatFunc(lift_poly(num_, target), lift_poly(den_, target), Canonical{});
}

RatFunc RatFunc::project_to(const FieldTower& base) const {
  auto proj = [&](const UPoly& p) {
    std::vector<NFElement> c;
    for (const auto& x : p.coeffs()) c.push_back(x.project_to(base));
    return UPoly(base, p.var(), std::move(c));
  };
  return RatFunc(proj(num_), proj(den_), Canonical{});
}

RatFunc RatFunc::map_coeffs(const FieldAutomorphism& sigma) const {
  // Automorphisms keep the denominator monic and coprime to the numerator.
  return RatFunc(map_poly(num_, sigma), map_poly(den_, sigma), Canonical{});
}

RatFunc RatFunc::with_var(const std::string& v) const {
  return RatFunc(num_.with_var(v), den_.with_var(v), Canonical{});
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string Place::to_string() const {
  if (is_infinity()) return "infinity";
  return poly->to_string();
}

int valuation(const RatFunc& f, const Place& v) {
  if (f.is_zero()) fail(ErrorCode::ZeroFunction, "valuation of the zero function");
  if (v.is_infinity()) return f.den().degree() - f.num().degree();
  const UPoly p = lift_poly(*v.poly, f.tower()).with_var(f.var());
  return multiplicity(f.num(), p) - multiplicity(f.den(), p);
}

RatFunc substitute(const RatFunc& f, const RatFunc& image) {
  const FieldTower& tower = image.tower();
  const UPoly& p = image.num();
  const UPoly& q = image.den();
  // P(p/q) * q^deg P as a polynomial.
  auto homog = [&](const UPoly& P) {
    const int n = P.degree();
    UPoly acc(tower, image.var());
    if (n < 0) return acc;
    std::vector<UPoly> qpow{q.one()};
    for (int k = 1; k <= n; ++k) qpow.push_back(qpow.back() * q);
    UPoly ppow = p.one();
    for (int i = 0; i <= n; ++i) {
      const NFElement c = P.coeffs()[i].lift_to(tower);
      if (!c.is_zero()) acc += (ppow * qpow[n - i]).scaled(c);
      if (i < n) ppow *= p;
    }
    return acc;
  };
  UPoly num = homog(f.num());
  UPoly den = homog(f.den());
  if (den.is_zero()) fail(ErrorCode::IndeterminateForm, "substituted denominator vanishes");
  const int dn = f.num().degree(), dd = f.den().degree();
  if (dn > dd)
    den *= q.pow(dn - dd);
  else if (dd > dn)
    num *= q.pow(dd - dn);
  return RatFunc(std::move(num), std::move(den));
}

RatFunc rewrite_in_power(const RatFunc& f, int m, const std::string& newvar,
                         const std::optional<NFElement>& zeta) {
  if (m < 1) fail(ErrorCode::NotInSubfield, "power must be positive");
  const FieldTower& tower = f.tower();
  if (zeta) {
    const NFElement z = zeta->lift_to(tower);
    if (!z.pow(m).is_one()) fail(ErrorCode::NotInSubfield, "zeta is not an m-th root of unity");
    for (int d = 1; d < m; ++d)
      if (m % d == 0 && z.pow(d).is_one())
        fail(ErrorCode::NotInSubfield, "zeta is not primitive");
    const RatFunc image = RatFunc(UPoly::monomial(tower, f.var(), z, 1));
    if (!(substitute(f, image) == f))
      fail(ErrorCode::NotInSubfield, "function is not invariant under var -> zeta*var");
  }
  // The canonical form of an invariant function only involves powers var^(m*k).
  auto extract = [&](const UPoly& p) {
    std::vector<NFElement> c;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      if (i % m == 0) {
        c.push_back(p.coeffs()[i]);
      } else if (!p.coeffs()[i].is_zero()) {
        fail(ErrorCode::NotInSubfield, "exponent not divisible by the power");
      }
    }
    return UPoly(tower, newvar, std::move(c));
  };
  RatFunc r(extract(f.num()), extract(f.den()));
  const RatFunc power = RatFunc(UPoly::monomial(tower, f.var(), tower.one(), static_cast<std::size_t>(m)));
  if (!(substitute(r, power) == f))
    fail(ErrorCode::NotInSubfield, "rewritten function does not reproduce the input");
  return r;
}

}  // namespace inose
