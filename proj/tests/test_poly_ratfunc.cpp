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
#include "inose/mw_lattice.hpp"
#include "inose/poly.hpp"
#include "inose/ratfunc.hpp"
#include "test_support.hpp"

using namespace inose;
using inose::testing::Rng;

namespace {

UPoly linear(const NFElement& root, const std::string& var) {
  return UPoly(root.tower(), var, {-root, root.tower().one()});
}

bool canonical(const RatFunc& f) {
  if (f.is_zero()) return f.den().degree() == 0 && f.den().lead().is_one();
  return f.den().lead().is_one() && gcd(f.num(), f.den()).degree() == 0;
}

}  // namespace

TEST_CASE("division with remainder") {
  Rng rng(21);
  const FieldTower k = testing::q_w_c();
  for (int n = 0; n < 20; ++n) {
    const UPoly f = rng.poly(k, "x", 6), g = rng.poly(k, "x", 1 + n % 4);
    const auto [q, r] = divrem(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("resultant of split polynomials") {
  Rng rng(22);
  const FieldTower k = testing::q_sqrt2();
  for (int n = 0; n < 10; ++n) {
    const NFElement a = rng.element(k), b = rng.element(k), c = rng.element(k), d = rng.element(k);
    const UPoly f = linear(a, "x") * linear(b, "x");
    const UPoly g = linear(c, "x") * linear(d, "x");
    const NFElement expect = (a - c) * (a - d) * (b - c) * (b - d);
    CHECK(resultant(f, g) == expect);
    CHECK(resultant(g, f) == expect);
    CHECK(resultant(f, f).is_zero());
  }
}

TEST_CASE("square-free decomposition") {
  const FieldTower k = testing::q_sqrt2();
  const NFElement r2 = k.generator("r2");
  const UPoly p1 = linear(r2, "x"), p2 = linear(k.from_int(3), "x");
  const UPoly p3 = UPoly(k, "x", {k.from_int(1), k.zero(), k.one()});
  const UPoly f = p1 * p2 * p2 * p3 * p3 * p3;
  const auto parts = squarefree_decomposition(f.scaled(k.from_int(7)));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::make_pair(p1, 1));
  CHECK(parts[1] == std::make_pair(p2, 2));
  CHECK(parts[2] == std::make_pair(p3, 3));
}

TEST_CASE("rational functions stay canonical") {
  Rng rng(23);
  const FieldTower k = testing::q_r2_i_rho();
  RatFunc acc = RatFunc::constant(k, "t", 1);
  for (int n = 0; n < 15; ++n) {
    const RatFunc f = rng.ratfunc(k, "t", 2, 1 + n % 2);
    switch (n % 4) {
      case 0: acc = acc + f; break;
      case 1: acc = acc * f; break;
      case 2: acc = acc - f * f; break;
      default: acc = acc / f; break;
    }
    CHECK(canonical(acc));
  }
  const RatFunc t = RatFunc::variable(k, "t");
  CHECK(canonical((t * t - RatFunc::constant(k, "t", 1)) / (t + RatFunc::constant(k, "t", 1))));
  CHECK(((t * t - RatFunc::constant(k, "t", 1)) / (t + RatFunc::constant(k, "t", 1))).is_polynomial());
  CHECK_THROWS_AS(RatFunc(k, "t").inverse(), MathError);
}

TEST_CASE("valuations are additive and sum to zero") {
  Rng rng(24);
  const FieldTower k = testing::q_w_c();
  for (int n = 0; n < 10; ++n) {
    std::vector<NFElement> roots;
    std::vector<int> exps;
    RatFunc f = RatFunc::constant(k, "s", rng.nonzero(k));
    for (int j = 0; j < 4; ++j) {
      roots.push_back(rng.element(k) + k.from_int(100 * j));
      exps.push_back(static_cast<int>(rng.small(-3, 3)));
      f = f * RatFunc(linear(roots.back(), "s")).pow(exps.back());
    }
    int total = valuation(f, Place::infinity());
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const Place v = Place::finite(linear(roots[j], "s"));
      CHECK(valuation(f, v) == exps[j]);
      total += valuation(f, v);
    }
    CHECK(total == 0);
    const RatFunc g = rng.ratfunc(k, "s", 2, 1);
    const Place v = Place::finite(linear(roots[0], "s"));
    CHECK(valuation(f * g, v) == valuation(f, v) + valuation(g, v));
    CHECK(valuation(f * g, Place::infinity()) == valuation(f, Place::infinity()) + valuation(g, Place::infinity()));
  }
  CHECK_THROWS_AS(valuation(RatFunc(k, "s"), Place::infinity()), MathError);
}

TEST_CASE("substitution composes") {
  Rng rng(25);
  const FieldTower k = testing::q_sqrt2();
  for (int n = 0; n < 10; ++n) {
    const RatFunc f = rng.ratfunc(k, "x", 3, 2);
    const RatFunc g = rng.ratfunc(k, "y", 2, 1).with_var("x");
    const RatFunc h = rng.ratfunc(k, "z", 1, 1);
    CHECK(substitute(substitute(f, g), h) == substitute(f, substitute(g, h)));
  }
}

TEST_CASE("rewrite_in_power inverts substitution by a power") {
  Rng rng(26);
  const FieldTower k = testing::q_w_c();
  const NFElement w = k.generator("w");
  const std::vector<std::pair<int, NFElement>> roots{{2, -k.one()}, {3, w}, {6, -w}};
  for (const auto& [m, zeta] : roots) {
    for (int n = 0; n < 8; ++n) {
      const RatFunc r = rng.ratfunc(k, "s", 1 + n % 3, n % 3);
      const RatFunc power(UPoly::monomial(k, "u", k.one(), static_cast<std::size_t>(m)));
      const RatFunc f = substitute(r, power);
      CHECK(rewrite_in_power(f, m, "s", zeta) == r);
      CHECK(rewrite_in_power(f, m, "s") == r);
      CHECK(substitute(rewrite_in_power(f, m, "s"), power) == f);
    }
  }
  const RatFunc u = RatFunc::variable(k, "u");
  const RatFunc bad = u * u * u + u;
  CHECK_THROWS_AS(rewrite_in_power(bad, 2, "s"), MathError);
  CHECK_THROWS_AS(rewrite_in_power(bad, 2, "s", -k.one()), MathError);
  CHECK_THROWS_AS(rewrite_in_power(u * u, 3, "s", w * w * w), MathError);
}

TEST_CASE("gcd-free basis") {
  const FieldTower k = FieldTower();
  const UPoly a = linear(k.from_int(1), "x"), b = linear(k.from_int(2), "x"), c = linear(k.from_int(3), "x");
  const auto basis = gcd_free_basis({a * b, b * c, a * a * c});
  CHECK(basis.size() == 3);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(gcd(basis[i], basis[j]).degree() == 0);
}
