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

#include <json.hpp>

#include "inose/errors.hpp"
#include "inose/serialization.hpp"
#include "test_support.hpp"

using namespace inose;
using inose::testing::Rng;

TEST_CASE("towers and elements round-trip") {
  Rng rng(61);
  for (const FieldTower& k : {FieldTower(), testing::q_w_c(), testing::q_r2_i_rho()}) {
    const FieldTower back = tower_from_json(tower_to_json(k));
    CHECK(back.degree() == k.degree());
    CHECK(tower_to_json(back) == tower_to_json(k));
    for (int n = 0; n < 10; ++n) {
      const NFElement x = rng.element(k, 1000000);
      const NFElement y = element_from_json(element_to_json(x));
      CHECK(y.to_string() == x.to_string());
      CHECK(element_to_json(y) == element_to_json(x));
    }
  }
}

TEST_CASE("big integers survive as strings") {
  const FieldTower q;
  const NFElement x = q.from_rational(parse_rational("123456789012345678901234567891/7"));
  const auto j = nlohmann::json::parse(element_to_json(x));
  CHECK(j["coeffs"][0][0] == "123456789012345678901234567891");
  CHECK(j["coeffs"][0][1] == "7");
  CHECK(element_from_json(element_to_json(x)) == x);
}

TEST_CASE("tower input accepts expressions") {
  const FieldTower k = tower_from_json(R"([{"name": "r2", "minpoly": ["-2", "0", "1"]},
                                           {"name": "rho", "minpoly": ["r2 - 1", "0", "1"]}])");
  CHECK(k.degree() == 4);
  const NFElement rho = k.generator("rho");
  CHECK(rho * rho == k.one() - k.generator("r2"));
}

TEST_CASE("malformed input raises ParseError") {
  const auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const MathError& e) {
      return e.code();
    }
    return ErrorCode::NotMonic;
  };
  CHECK(code([] { tower_from_json("{"); }) == ErrorCode::ParseError);
  CHECK(code([] { tower_from_json(R"([{"name": "x", "minpoly": ["1", "2"]}])"); }) == ErrorCode::ParseError);
  CHECK(code([] { element_from_json(R"({"tower": [], "coeffs": [["1", "0"]]})"); }) == ErrorCode::ParseError);
  CHECK(code([] { element_from_json(R"({"tower": [], "coeffs": [["1", "2"], ["1", "2"]]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code([] { element_from_json(R"({"coeffs": []})"); }) == ErrorCode::ParseError);
}

TEST_CASE("polynomials, functions, curves and sections round-trip") {
  Rng rng(62);
  const FieldTower k = testing::q_w_c();
  const UPoly p = rng.poly(k, "s", 4);
  CHECK(poly_from_json(poly_to_json(p), k) == p);
  const RatFunc f = rng.ratfunc(k, "s", 3, 2);
  CHECK(ratfunc_from_json(ratfunc_to_json(f), k) == f);

  const auto fam = build_family(k.from_int(6), k.from_int(-1));
  CHECK(curve_from_json(curve_to_json(fam.E2)) == fam.E2);

  const SurfaceModel s = build_surface(invariants_from_family(fam), 1);
  const SurfaceModel t = surface_from_json(surface_to_json(s));
  CHECK(t.n == s.n);
  CHECK(t.var == s.var);
  CHECK(t.curve == s.curve);
  CHECK(t.lambda == s.lambda);
  CHECK(t.mu == s.mu);

  const Section pt = Section::affine(f, f * f);
  CHECK(section_from_json(section_to_json(pt), k) == pt);
  CHECK(section_from_json(section_to_json(Section::infinity()), k).is_infinity());

  const auto j = nlohmann::json::parse(family_to_json(fam));
  for (const char* key : {"a", "b", "E1", "E2", "phi_x", "phi_y"}) CHECK(j.contains(key));
}

TEST_CASE("reports serialize deterministically") {
  const FieldTower q;
  ExampleReport r = run_family(q.from_int(1), q.from_int(1));
  const std::string first = report_to_json(r);
  r.seconds += 100;
  CHECK(report_to_json(r) == first);
  CHECK(report_to_json(run_family(q.from_int(1), q.from_int(1))) == first);

  const auto j = nlohmann::ordered_json::parse(first);
  CHECK(j["passed"] == true);
  CHECK(j["surfaces"].size() == 2);
  CHECK(j["surfaces"][1]["det"] == "16/3");
  CHECK(j["surfaces"][0]["fibers"][0].contains("place"));
  CHECK(j["surfaces"][0]["fibers"][0].contains("type"));
  CHECK(j["surfaces"][1]["sections"][0]["provenance"] == "P2_from_phi");
  // Field order is fixed.
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"example", "field", "facts", "surfaces", "checks", "passed"});
}

TEST_CASE("latex output pulls out the common denominator") {
  const FieldTower q;
  const std::string tex = report_to_latex(run_family(q.from_int(2), q.from_int(-1)));
  CHECK(tex.find("\\frac{1}{3}\\begin{pmatrix}") != std::string::npos);
  CHECK(tex.find("12 & 0 & 0 & -3 & -3") != std::string::npos);
  CHECK(tex.find("det = 16/3") != std::string::npos);
}
