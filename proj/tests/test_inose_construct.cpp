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


#include <doctest.h>

#include "inose/errors.hpp"
#include "inose/inose_construct.hpp"
#include "inose/isogeny.hpp"
#include "inose/section_solver.hpp"
#include "test_support.hpp"

using namespace inose;
using inose::testing::Rng;

namespace {

ThreeIsogenyFamily rational_family(long a, long b) {
  const FieldTower q;
  return build_family(q.from_int(a), q.from_int(b));
}

std::vector<ThreeIsogenyFamily> all_families() {
  std::vector<ThreeIsogenyFamily> out;
  for (const auto& [a, b] : testing::acceptance_pairs()) out.push_back(rational_family(a, b));
  const FieldTower k = testing::q_sqrt2();
  out.push_back(build_family(k.one() + k.generator("r2"), k.from_int(2)));
  out.push_back(build_family(k.from_int(3), k.generator("r2")));
  return out;
}

UPoly shifted(const UPoly& f, const NFElement& c) {
  const FieldTower& k = c.tower();
  return substitute(RatFunc(f), RatFunc(UPoly(k, f.var(), {c, k.one()}))).num();
}

}  // namespace

TEST_CASE("invariants are products of c4, c6 and the discriminants") {
  for (const auto& fam : all_families()) {
    const InoseData d = invariants_from_family(fam);
    const auto i1 = fam.E1.invariants(), i2 = fam.E2.invariants();
    CHECK(d.A == i1.c4 * i2.c4 / fam.tower.from_int(256));
    CHECK(d.B == i1.c6 * i2.c6 / fam.tower.from_int(864));
    CHECK(d.D1 == i1.disc);
    CHECK(d.D2 == i2.disc);
  }
}

TEST_CASE("invariants do not see translations of x") {
  Rng rng(41);
  const FieldTower k = testing::q_sqrt2();
  const auto fam = build_family(k.one() + k.generator("r2"), k.from_int(2));
  const UPoly f1 = cubic_rhs(fam.E1, "x"), f2 = cubic_rhs(fam.E2, "x");
  const InoseData d = invariants_from_cubics(f1, f2);
  for (int n = 0; n < 5; ++n) {
    const InoseData e = invariants_from_cubics(shifted(f1, rng.element(k)), shifted(f2, rng.element(k)));
    CHECK(e.A == d.A);
    CHECK(e.B == d.B);
    CHECK(e.D1 == d.D1);
    CHECK(e.D2 == d.D2);
  }
  const UPoly square = UPoly(k, "x", {k.zero(), k.zero(), k.one(), k.one()});
  CHECK_THROWS_AS(invariants_from_cubics(square, f2), MathError);
}

TEST_CASE("F^(n) has the expected shape") {
  const auto fam = rational_family(3, 2);
  const InoseData d = invariants_from_family(fam);
  const FieldTower q;
  for (int n : {1, 2, 6}) {
    const SurfaceModel s = build_surface(d, n);
    const RatFunc v = RatFunc::variable(q, s.var);
    CHECK(s.n == n);
    CHECK(s.curve.a4() == RatFunc::constant(q, s.var, -d.A / q.from_int(3)));
    const RatFunc a6 = (v.pow(n) * d.D1 + RatFunc::constant(q, s.var, d.B) + v.pow(-n) * d.D2) *
                       q.from_rational(ratio(1, 64));
    CHECK(s.curve.a6() == a6);
    CHECK(s.lambda.is_one());
    CHECK(s.mu.is_one());
  }
  CHECK(build_surface(d, 1).var == "s");
  CHECK(build_surface(d, 2).var == "t");
  CHECK(build_surface(d, 6).var == "u");
  CHECK_THROWS_AS(build_surface(d, 7), MathError);
  CHECK_THROWS_AS(build_surface(d, 0), MathError);
}

TEST_CASE("F^(1) and F^(2) pull back to F^(6)") {
  for (const auto& fam : all_families()) {
    const InoseData d = invariants_from_family(fam);
    const SurfaceModel f1 = build_surface(d, 1), f2 = build_surface(d, 2), f6 = build_surface(d, 6);
    const RatFunc u = RatFunc::variable(fam.tower, "u");
    CHECK(substitute(f1.curve.a6(), u.pow(6)) == f6.curve.a6());
    CHECK(substitute(f2.curve.a6(), u.pow(3)) == f6.curve.a6());
    CHECK(build_weier_f6(fam, fam.tower) == f6.curve);
  }
}

TEST_CASE("verify_psi holds for every family") {
  for (const auto& fam : all_families()) CHECK(verify_psi(fam));
}

TEST_CASE("normalization records and applies the rescale") {
  Rng rng(42);
  const auto fam = rational_family(1, 1);
  const FieldTower q;
  const SurfaceModel s = build_surface(invariants_from_family(fam), 1);
  for (int n = 0; n < 5; ++n) {
    const NFElement l = rng.nonzero(q), m = rng.nonzero(q);
    const SurfaceModel t = normalize_surface(s, l, m, "sp");
    CHECK(t.var == "sp");
    CHECK(t.lambda == l);
    CHECK(t.mu == m);
    const RatFunc back = RatFunc::variable(q, "s") / RatFunc::constant(q, "s", m);
    CHECK(substitute(t.curve.a4(), back) == s.curve.a4() * l.pow(4));
    CHECK(substitute(t.curve.a6(), back) == s.curve.a6() * l.pow(6));
  }
  CHECK_THROWS_AS(normalize_surface(s, q.zero(), q.one(), "sp"), MathError);
}

TEST_CASE("Psi specializes at rational u0") {
  // Specialize the sixth points of both conics at u = u0; the map at u0
  // must land on F^(6) at u0 and agree with the specialized image.
  const auto fam = rational_family(2, -1);
  const FieldTower& k = fam.tower;
  const auto psi = build_psi(fam);
  const auto cubic = build_cubic_model(fam, k);
  const FunctionCurve f6 = build_weier_f6(fam, k);
  const auto at = [&](const NFElement& c) { return RatFunc::constant(k, "u", c); };
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const auto p = sixth_point(fam, sign, solve_conic(fam, sign, k), k);
    const Section image = psi_apply(psi, p);
    for (const BigRational& u0 : {BigRational(2), BigRational(3), ratio(-5, 2), ratio(7, 3)}) {
      const NFElement v = k.from_rational(u0);
      const ProjPoint<RatFunc> q{at(p[0].eval(v)), at(p[1].eval(v)), at(p[2].eval(v))};
      CHECK(cubic.eval(q).eval(v).is_zero());
      const Section sq = psi_apply(psi, q);
      REQUIRE_FALSE(sq.is_infinity());
      const Curve e = Curve::short_form(f6.a4().eval(v), f6.a6().eval(v));
      const Curve::Point pt = Curve::Point::affine(sq.x().eval(v), sq.y().eval(v));
      CHECK(e.on_curve(pt));
      CHECK(pt == Curve::Point::affine(image.x().eval(v), image.y().eval(v)));
    }
  }
}
