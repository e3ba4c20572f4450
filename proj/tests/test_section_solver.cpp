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
#include "inose/roots.hpp"
#include "inose/section_solver.hpp"
#include "test_support.hpp"

using namespace inose;

namespace {

ThreeIsogenyFamily rational_family(long a, long b) {
  const FieldTower q;
  return build_family(q.from_int(a), q.from_int(b));
}

ThreeIsogenyFamily sqrt2_family() {
  const FieldTower k = testing::q_sqrt2();
  return build_family(k.one() + k.generator("r2"), k.from_int(2));
}

}  // namespace

TEST_CASE("isogeny divisor form") {
  const auto fam = rational_family(3, 2);
  const FieldTower& k = fam.tower;
  const RatFunc u = RatFunc::variable(k, "u");
  const auto c = [&](long v) { return RatFunc::constant(k, "u", v); };
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const auto p = isogeny_divisor_form(fam, sign, k);
    REQUIRE(p.degree() == 3);
    CHECK(p.coeff(0) == c(-8 * 3 * 2 * 2));
    CHECK(p.coeff(1) == c(4 * 3 * 2));
    CHECK(p.coeff(2).is_zero());
    CHECK(p.coeff(3) == (sign == Sign::Plus ? c(1) - u.pow(3) : c(1) + u.pow(3)));
  }
}

TEST_CASE("conic gauge and sixth point") {
  const auto fam = rational_family(2, -1);
  const FieldTower& k = fam.tower;
  const auto cubic = build_cubic_model(fam, k);
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const ConicCoeffs q = solve_conic(fam, sign, k);
    std::size_t first = 0;
    while (first < 6 && q.c[first].is_zero()) ++first;
    REQUIRE(first < 6);
    CHECK(q.c[first] == RatFunc::constant(k, "u", 1));
    const auto p = sixth_point(fam, sign, q, k);
    CHECK(cubic.contains(p));
    // q(p) = 0 as well.
    const RatFunc& x1 = p[0];
    const RatFunc& x2 = p[1];
    const RatFunc& z = p[2];
    CHECK((q.c[0] * x1 * x1 + q.c[1] * x1 * x2 + q.c[2] * x2 * x2 + q.c[3] * x1 * z + q.c[4] * x2 * z +
           q.c[5] * z * z)
              .is_zero());
    CHECK(build_weier_f6(fam, k).on_curve(phi_point(fam, sign, k)));
  }
}

TEST_CASE("P+ - P- is invariant under u -> -w u") {
  const auto fam = rational_family(1, 1);
  const FieldTower& k = fam.tower;
  const FunctionCurve f6 = build_weier_f6(fam, k);
  const Section diff = f6.sub(phi_point(fam, Sign::Plus, k), phi_point(fam, Sign::Minus, k));
  auto [K, w] = with_cube_root_of_unity(k);
  const RatFunc x = diff.x().lift_to(K), y = diff.y().lift_to(K);
  const RatFunc image = RatFunc::variable(K, x.var()) * (-w);
  CHECK(substitute(x, image) == x);
  CHECK(substitute(y, image) == y);
  // The individual points are not invariant.
  const Section plus = phi_point(fam, Sign::Plus, k);
  CHECK_FALSE(substitute(plus.x().lift_to(K), image) == plus.x().lift_to(K));
}

TEST_CASE("descended sections match the closed forms") {
  for (const auto& fam : {rational_family(1, 1), rational_family(-1, 2), sqrt2_family()}) {
    const auto p1 = section_F1(fam);
    const auto p2 = section_F2(fam);
    CHECK(p1.surface.n == 1);
    CHECK(p2.surface.n == 2);
    CHECK(p1.surface.curve.on_curve(p1.point));
    CHECK(p2.surface.curve.on_curve(p2.point));
    CHECK(p1.point == closed_form_F1(fam));
    CHECK(p2.point == closed_form_F2(fam));
    // A sign flip is a different section, not a match.
    CHECK_FALSE(p1.surface.curve.neg(p1.point) == closed_form_F1(fam));
  }
}

TEST_CASE("R_ij sections lie on F^(2)") {
  const auto fam = rational_family(1, 1);
  const auto tt = two_torsion(fam);
  const auto rs = sections_Rij(fam, tt, {{2, 2}, {3, 3}, {2, 3}, {3, 2}});
  REQUIRE(rs.size() == 4);
  for (const auto& r : rs) {
    CHECK(r.surface.n == 2);
    CHECK(r.surface.curve.on_curve(r.point));
    CHECK(r.point.x().is_constant());
  }
}

TEST_CASE("Galois images move sections between conjugate surfaces") {
  const auto fam = sqrt2_family();
  const FieldTower& k = fam.tower;
  const auto sigma = FieldAutomorphism::moving(k, "r2", -k.generator("r2"));
  const auto conj = build_family(sigma(fam.a), sigma(fam.b));
  const auto p1 = section_F1(fam);
  const auto img = galois_image(p1, sigma, section_F1(conj).surface);
  CHECK(img.point == section_F1(conj).point);
  CHECK_THROWS_AS(galois_image(p1, sigma, p1.surface), MathError);
}
