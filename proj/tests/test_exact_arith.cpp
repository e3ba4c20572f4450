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

#include <complex>

#include "inose/errors.hpp"
#include "inose/number_field.hpp"
#include "inose/numeric.hpp"
#include "inose/poly.hpp"
#include "inose/roots.hpp"
#include "test_support.hpp"

using namespace inose;
using inose::testing::Rng;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const MathError& e) {
    return e.code();
  }
  FAIL("expected a MathError");
  return ErrorCode::ParseError;
}

// Textbook Euclid, kept separate from the library's gcd.
UPoly euclid_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(ratio(4, -6) == ratio(-2, 3));
  CHECK(ratio(4, -6).get_den() == 3);
  CHECK(ratio(0, 7).get_den() == 1);
  CHECK(parse_rational("-10/4") == ratio(-5, 2));
  CHECK(to_string(ratio(12, 8)) == "3/2");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { parse_rational("x"); }) == ErrorCode::ParseError);
}

TEST_CASE("tower shape") {
  CHECK(FieldTower().degree() == 1);
  CHECK(FieldTower().num_steps() == 0);
  const FieldTower k = testing::q_w_c();
  CHECK(k.degree() == 6);
  CHECK(k.step_degree(0) == 2);
  CHECK(k.step_degree(1) == 3);
  CHECK(k.generator_name(1) == "c");
  CHECK(testing::q_r2_i_rho().degree() == 8);
  CHECK(code_of([] { FieldTower().extend("x", std::vector<BigRational>{1, 1}); }) == ErrorCode::DegreeTooSmall);
  CHECK(code_of([] { FieldTower().extend("x", std::vector<BigRational>{1, 0, 2}); }) == ErrorCode::NotMonic);
}

TEST_CASE("generators satisfy their minimal polynomials") {
  const FieldTower k = testing::q_r2_i_rho();
  const NFElement r2 = k.generator("r2"), i = k.generator("i"), rho = k.generator("rho");
  CHECK(r2 * r2 == k.from_int(2));
  CHECK(i * i == k.from_int(-1));
  CHECK(rho * rho == k.one() - r2);
  const FieldTower wc = testing::q_w_c();
  const NFElement w = wc.generator("w"), c = wc.generator("c");
  CHECK(w * w + w + wc.one() == wc.zero());
  CHECK(c.pow(3) == wc.from_int(2));
  CHECK(c.pow(-3) == wc.from_rational(ratio(1, 2)));
}

TEST_CASE("field axioms on random elements") {
  Rng rng(11);
  for (const FieldTower& k : {testing::q_sqrt2(), testing::q_w_c(), testing::q_r2_i_rho()}) {
    for (int n = 0; n < 40; ++n) {
      const NFElement x = rng.element(k), y = rng.element(k), z = rng.nonzero(k);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(z * z.inverse() == k.one());
      CHECK((x / z) * z == x);
      CHECK(x - x == k.zero());
    }
  }
}

TEST_CASE("lifting and projecting along a tower") {
  Rng rng(12);
  const FieldTower big = testing::q_r2_i_rho();
  const FieldTower base = testing::q_sqrt2();
  CHECK(big.extends(base));
  for (int n = 0; n < 20; ++n) {
    const NFElement x = rng.element(base), y = rng.element(base);
    CHECK((x.lift_to(big) * y.lift_to(big)).project_to(base) == x * y);
  }
  CHECK(code_of([&] { big.generator("i").project_to(base); }) == ErrorCode::NotInSubfield);
}

TEST_CASE("reducible minimal polynomial raises NotAField") {
  const FieldTower k = FieldTower().extend("x", std::vector<BigRational>{-4, 0, 1});
  const NFElement x = k.generator("x");
  CHECK(code_of([&] { (x - k.from_int(2)).inverse(); }) == ErrorCode::NotAField);
  CHECK((x - k.from_int(1)).inverse() * (x - k.from_int(1)) == k.one());
}

TEST_CASE("automorphisms are multiplicative and fix Q") {
  Rng rng(13);
  const FieldTower k = testing::q_w_c();
  const NFElement w = k.generator("w"), c = k.generator("c");
  const auto conj = FieldAutomorphism::moving(k, "w", w * w);
  const auto rot = FieldAutomorphism::moving(k, "c", w * c);
  for (const auto& a : {conj, rot, conj.then(rot)}) {
    for (int n = 0; n < 25; ++n) {
      const NFElement x = rng.element(k), y = rng.element(k);
      CHECK(a(x * y) == a(x) * a(y));
      CHECK(a(x + y) == a(x) + a(y));
      const BigRational q = rng.rational();
      CHECK(a(k.from_rational(q)) == k.from_rational(q));
    }
  }
  for (int n = 0; n < 10; ++n) {
    const NFElement x = rng.element(k);
    CHECK(conj(conj(x)) == x);
    CHECK(rot(rot(rot(x))) == x);
  }
  CHECK(code_of([&] { FieldAutomorphism::moving(k, "c", c + k.one()); }) == ErrorCode::InvalidAutomorphism);
}

TEST_CASE("numeric embedding is a ring homomorphism up to enclosure") {
  Rng rng(14);
  const FieldTower k = testing::q_r2_i_rho();
  for (const auto& gens : all_embeddings(k)) {
    const Embedding e{gens};
    for (int n = 0; n < 5; ++n) {
      const NFElement x = rng.element(k), y = rng.element(k);
      const ComplexBall xy = numeric_embed(x * y, e, 128);
      const ComplexBall prod = numeric_embed(x, e, 128) * numeric_embed(y, e, 128);
      CHECK(prod.overlaps(xy));
      CHECK(std::abs(xy.mid() - embed_double(x, gens) * embed_double(y, gens)) < 1e-9 * (1 + std::abs(xy.mid())));
    }
  }
  CHECK(all_embeddings(k).size() == 8);
}

TEST_CASE("parse_element reads to_string output") {
  Rng rng(15);
  for (const FieldTower& k : {testing::q_w_c(), testing::q_r2_i_rho()}) {
    for (int n = 0; n < 30; ++n) {
      const NFElement x = rng.element(k);
      CHECK(parse_element(k, x.to_string()) == x);
    }
  }
  const FieldTower k = testing::q_sqrt2();
  CHECK(parse_element(k, "(1 + r2)^2 / 3") == (k.from_int(3) + k.generator("r2") * k.from_int(2)) / k.from_int(3));
  CHECK(parse_element(k, "r2^-1") == k.generator("r2") / k.from_int(2));
  CHECK(code_of([&] { parse_element(k, "r3 + 1"); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { parse_element(k, "(1 + r2"); }) == ErrorCode::ParseError);
}

TEST_CASE("modular gcd agrees with Euclid") {
  Rng rng(16);
  for (const FieldTower& k : {testing::q_sqrt2(), testing::q_w_c(), testing::q_r2_i_rho()}) {
    for (int n = 0; n < 6; ++n) {
      const UPoly g = rng.poly(k, "x", 1 + n % 3, 4);
      const UPoly a = g * rng.poly(k, "x", 3, 4);
      const UPoly b = g * rng.poly(k, "x", 2 + n % 2, 4);
      const auto fast = modular_gcd(a, b);
      const UPoly slow = euclid_gcd(a, b);
      REQUIRE(fast.has_value());
      CHECK(*fast == slow);
      CHECK(gcd(a, b) == slow);
      CHECK(divrem(slow, make_monic(g)).second.is_zero());
    }
  }
}
