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

#include <map>

#include "inose/errors.hpp"
#include "inose/named_examples.hpp"

using namespace inose;

namespace {

void require_all_pass(const ExampleReport& r) {
  for (const auto& c : r.checks) {
    INFO(c.id << ": " << c.description << " " << c.detail);
    CHECK(c.pass);
  }
}

std::map<std::string, int> components(const SurfaceModel& s, const Section& p) {
  std::map<std::string, int> out;
  for (const auto& t : height_detail(s, p).terms) out[t.fiber.place.to_string()] = t.component;
  return out;
}

}  // namespace

TEST_CASE("x333 reproduces the published data") {
  const ExampleReport r = run_x333();
  require_all_pass(r);
  for (const char* id : {"x333.j", "x333.f1.equation", "x333.f1.p1", "x333.f1.gram", "x333.f2.gram", "x333.f2.det",
                         "x333.f2.identity"})
    CHECK(r.find(id) != nullptr);
  REQUIRE(r.surfaces.size() == 2);
  CHECK(r.surfaces[1].det == 12);
  CHECK(r.surfaces[0].gram == Matrix<BigRational>{{6, 3}, {3, 6}});
}

TEST_CASE("x303 reproduces the published data") {
  const ExampleReport r = run_x303();
  require_all_pass(r);
  REQUIRE(r.surfaces.size() == 2);
  CHECK(r.surfaces[0].gram == Matrix<BigRational>{{6, 0}, {0, 6}});
  CHECK(r.surfaces[1].det == 16);
}

TEST_CASE("named lookup") {
  CHECK(named_examples() == std::vector<std::string>{"x333", "x323", "x303"});
  CHECK_THROWS_AS(run_named("x300"), MathError);
}

TEST_CASE("random combination check") {
  const ExampleReport r = run_x333();
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (const auto& s : r.surfaces) {
      const CheckResult c = random_combination_check(s, seed, "random");
      INFO(c.description << " " << c.detail);
      CHECK(c.pass);
    }
  }
  SurfaceRecord broken = r.surfaces[0];
  broken.gram[0][0] += 1;
  broken.gram[1][1] += 1;
  bool caught = false;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) caught = caught || !random_combination_check(broken, seed, "r").pass;
  CHECK(caught);
}

TEST_CASE("x333 component labels add on the IV* fibers") {
  const SurfaceRecord f2 = run_x333().surfaces.at(1);
  const auto& E = f2.model.curve;
  for (std::size_t i = 0; i < f2.basis.size(); ++i) {
    for (std::size_t j = i; j < f2.basis.size(); ++j) {
      const auto ci = components(f2.model, f2.basis[i].point);
      const auto cj = components(f2.model, f2.basis[j].point);
      const auto cs = components(f2.model, E.add(f2.basis[i].point, f2.basis[j].point));
      for (const auto& f : f2.fibers) {
        if (f.kind != FiberKind::IVstar) continue;
        const std::string place = f.place.to_string();
        const auto get = [&](const std::map<std::string, int>& m) { return m.count(place) ? m.at(place) : 0; };
        INFO(f2.basis[i].name << " + " << f2.basis[j].name << " at " << place);
        CHECK((get(ci) + get(cj)) % 3 == get(cs));
      }
    }
  }
}
