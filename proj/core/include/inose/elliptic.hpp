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

#include "inose/errors.hpp"
#include "inose/poly.hpp"

namespace inose {

// Point of a Weierstrass curve over the field F; the point at infinity has
// no coordinates.
template <class F>
struct CurvePoint {
  std::optional<std::pair<F, F>> xy;

  static CurvePoint infinity() { return CurvePoint{}; }
  static CurvePoint affine(F x, F y) { return CurvePoint{std::make_pair(std::move(x), std::move(y))}; }

  bool is_infinity() const { return !xy.has_value(); }
  const F& x() const { return xy->first; }
  const F& y() const { return xy->second; }

  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
    return p.x() == q.x() && p.y() == q.y();
  }
};

template <class F>
struct CurveInvariants {
  F c4, c6, disc, j;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <class F>
class WeierstrassCurve {
 public:
  using Traits = RingTraits<F>;
  using Point = CurvePoint<F>;

  WeierstrassCurve(F a1, F a2, F a3, F a4, F a6)
      : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    if (Traits::is_zero(discriminant())) fail(ErrorCode::SingularCurve, "curve discriminant vanishes");
  }
  static WeierstrassCurve short_form(const F& a4, const F& a6) {
    const F z = Traits::zero(Traits::ctx(a6));
    return WeierstrassCurve(z, z, z, a4, a6);
  }

  const F& a1() const { return a_[0]; }
  const F& a2() const { return a_[1]; }
  const F& a3() const { return a_[2]; }
  const F& a4() const { return a_[3]; }
  const F& a6() const { return a_[4]; }
  F zero() const { return Traits::zero(Traits::ctx(a_[4])); }
  F one() const { return Traits::one(Traits::ctx(a_[4])); }
  F integer(long n) const { return Traits::from_int(Traits::ctx(a_[4]), n); }

  F b2() const { return a1() * a1() + integer(4) * a2(); }
  F b4() const { return a1() * a3() + integer(2) * a4(); }
  F b6() const { return a3() * a3() + integer(4) * a6(); }
  F b8() const {
    return a1() * a1() * a6() + integer(4) * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() -
           a4() * a4();
  }
  F c4() const { return b2() * b2() - integer(24) * b4(); }
  F c6() const { return -(b2() * b2() * b2()) + integer(36) * b2() * b4() - integer(216) * b6(); }
  F discriminant() const {
    const F B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - integer(8) * B4 * B4 * B4 - integer(27) * B6 * B6 + integer(9) * B2 * B4 * B6;
  }
  CurveInvariants<F> invariants() const {
    F c = c4();
    F d = discriminant();
    F j = c * c * c / d;
    return {std::move(c), c6(), std::move(d), std::move(j)};
  }

  bool on_curve(const Point& p) const {
    if (p.is_infinity()) return true;
    const F& x = p.x();
    const F& y = p.y();
    return y * y + a1() * x * y + a3() * y == ((x + a2()) * x + a4()) * x + a6();
  }
  void require_on_curve(const Point& p) const {
    if (!on_curve(p)) fail(ErrorCode::PointNotOnCurve, "point is not on the curve");
  }

  Point neg(const Point& p) const {
    if (p.is_infinity()) return p;
    return Point::affine(p.x(), -p.y() - a1() * p.x() - a3());
  }

  Point add(const Point& p, const Point& q) const {
    require_on_curve(p);
    require_on_curve(q);
    return add_unchecked(p, q);
  }
  Point sub(const Point& p, const Point& q) const { return add(p, neg(q)); }

  Point smul(long n, const Point& p) const {
    require_on_curve(p);
    if (n < 0) return smul(-n, neg(p));
    Point acc = Point::infinity(), base = p;
    while (n) {
      if (n & 1) acc = add_unchecked(acc, base);
      n >>= 1;
      if (n) base = add_unchecked(base, base);
    }
    return acc;
  }

  // (x, y) -> (l^2 x, l^3 y); the short form maps to a4 l^4, a6 l^6.
  WeierstrassCurve rescaled(const F& l) const {
    if (Traits::is_zero(l)) fail(ErrorCode::ZeroScale, "rescale by zero");
    const F l2 = l * l, l3 = l2 * l;
    return WeierstrassCurve(a1() * l, a2() * l2, a3() * l3, a4() * l2 * l2, a6() * l3 * l3);
  }
  static Point rescale_point(const Point& p, const F& l) {
    if (p.is_infinity()) return p;
    const F l2 = l * l;
    return Point::affine(p.x() * l2, p.y() * l2 * l);
  }

  friend bool operator==(const WeierstrassCurve& e, const WeierstrassCurve& f) { return e.a_ == f.a_; }

  std::string to_string() const {
    std::string s = "y^2";
    if (!Traits::is_zero(a1())) s += " + (" + Traits::str(a1()) + ")*x*y";
    if (!Traits::is_zero(a3())) s += " + (" + Traits::str(a3()) + ")*y";
    s += " = x^3";
    if (!Traits::is_zero(a2())) s += " + (" + Traits::str(a2()) + ")*x^2";
    if (!Traits::is_zero(a4())) s += " + (" + Traits::str(a4()) + ")*x";
    if (!Traits::is_zero(a6())) s += " + (" + Traits::str(a6()) + ")";
    return s;
  }

 private:
  Point add_unchecked(const Point& p, const Point& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    F lambda = zero(), nu = zero();
    if (p.x() == q.x()) {
      const F ysum = p.y() + q.y() + a1() * q.x() + a3();
      if (Traits::is_zero(ysum)) return Point::infinity();
      const F& x = p.x();
      const F num = integer(3) * x * x + integer(2) * a2() * x + a4() - a1() * p.y();
      const F den = integer(2) * p.y() + a1() * x + a3();
      lambda = num / den;
      nu = (-(x * x * x) + a4() * x + integer(2) * a6() - a3() * p.y()) / den;
    } else {
      const F dx = q.x() - p.x();
      lambda = (q.y() - p.y()) / dx;
      nu = (p.y() * q.x() - q.y() * p.x()) / dx;
    }
    F x3 = lambda * lambda + a1() * lambda - a2() - p.x() - q.x();
    F y3 = -(lambda + a1()) * x3 - nu - a3();
    return Point::affine(std::move(x3), std::move(y3));
  }

  std::array<F, 5> a_;
};

template <class F>
using ProjPoint = std::array<F, 3>;

// Projective points compare up to a common nonzero scalar.
template <class F>
bool proj_equal(const ProjPoint<F>& p, const ProjPoint<F>& q) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(p[i] * q[j] == p[j] * q[i])) return false;
  return true;
}

template <class F>
struct TangentData {
  ProjPoint<F> line;  // l0 x + l1 y + l2 z
  ProjPoint<F> third;
};

// Homogeneous cubic in (x, y, z) with a marked origin on it.  No group law
// lives here; callers transport points to a Weierstrass model instead.
template <class F>
class PlaneCubicWithOrigin {
 public:
  using Traits = RingTraits<F>;
  struct Term {
    std::array<int, 3> exp;
    F coeff;
  };

  PlaneCubicWithOrigin(std::vector<Term> terms, ProjPoint<F> origin)
      : terms_(std::move(terms)), origin_(std::move(origin)) {
    for (const auto& t : terms_)
      if (t.exp[0] + t.exp[1] + t.exp[2] != 3) fail(ErrorCode::ParseError, "cubic term of wrong degree");
    if (!contains(origin_)) fail(ErrorCode::PointNotOnCurve, "origin is not on the cubic");
  }

  const std::vector<Term>& terms() const { return terms_; }
  const ProjPoint<F>& origin() const { return origin_; }

  F eval(const ProjPoint<F>& p) const {
    F acc = zero();
    for (const auto& t : terms_) {
      F m = t.coeff;
      for (int v = 0; v < 3; ++v)
        for (int e = 0; e < t.exp[v]; ++e) m = m * p[v];
      acc += m;
    }
    return acc;
  }
  bool contains(const ProjPoint<F>& p) const { return Traits::is_zero(eval(p)); }

  ProjPoint<F> gradient(const ProjPoint<F>& p) const {
    ProjPoint<F> g{zero(), zero(), zero()};
    for (const auto& t : terms_) {
      for (int v = 0; v < 3; ++v) {
        if (t.exp[v] == 0) continue;
        F m = t.coeff * Traits::from_int(ctx(), t.exp[v]);
        for (int w = 0; w < 3; ++w)
          for (int e = 0; e < t.exp[w] - (w == v ? 1 : 0); ++e) m = m * p[w];
        g[v] += m;
      }
    }
    return g;
  }

  // Tangent at p and the residual intersection of that line with the cubic.
  TangentData<F> tangent_and_third(const ProjPoint<F>& p) const {
    if (!contains(p)) fail(ErrorCode::PointNotOnCurve, "point is not on the cubic");
    ProjPoint<F> l = gradient(p);
    if (Traits::is_zero(l[0]) && Traits::is_zero(l[1]) && Traits::is_zero(l[2]))
      fail(ErrorCode::SingularPoint, "tangent requested at a singular point");
    // A second point d on the line: l x e_k for a unit vector e_k.
    std::optional<ProjPoint<F>> d;
    for (int k = 0; k < 3 && !d; ++k) {
      ProjPoint<F> e{zero(), zero(), zero()};
      e[k] = Traits::one(ctx());
      ProjPoint<F> c{l[1] * e[2] - l[2] * e[1], l[2] * e[0] - l[0] * e[2], l[0] * e[1] - l[1] * e[0]};
      const bool nonzero = !(Traits::is_zero(c[0]) && Traits::is_zero(c[1]) && Traits::is_zero(c[2]));
      if (nonzero && !proj_equal(c, p)) d = c;
    }
    // On p + m d the cubic is m^2 (q2 + m F(d)); q2 from the even part.
    const ProjPoint<F>& dv = *d;
    ProjPoint<F> plus{p[0] + dv[0], p[1] + dv[1], p[2] + dv[2]};
    ProjPoint<F> minus{p[0] - dv[0], p[1] - dv[1], p[2] - dv[2]};
    const F half = Traits::inverse(Traits::from_int(ctx(), 2));
    const F q2 = (eval(plus) + eval(minus)) * half;
    const F fd = eval(dv);
    if (Traits::is_zero(q2) && Traits::is_zero(fd))
      fail(ErrorCode::SingularMember, "tangent line is a component of the cubic");
    ProjPoint<F> third{fd * p[0] - q2 * dv[0], fd * p[1] - q2 * dv[1], fd * p[2] - q2 * dv[2]};
    return {l, third};
  }

 private:
  typename Traits::Ctx ctx() const { return Traits::ctx(origin_[0]); }
  F zero() const { return Traits::zero(ctx()); }

  std::vector<Term> terms_;
  ProjPoint<F> origin_;
};

}  // namespace inose
