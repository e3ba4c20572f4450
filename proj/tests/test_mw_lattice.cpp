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
#include "inose/mw_lattice.hpp"
#include "inose/named_examples.hpp"
#include "inose/section_solver.hpp"
#include "test_support.hpp"

using namespace inose;
using inose::testing::Rng;

namespace {

ThreeIsogenyFamily rational_family(long a, long b) {
  const FieldTower q;
  return build_family(q.from_int(a), q.from_int(b));
}

// F^(2) over the two-torsion field with P2 and the four R-sections.
struct F2Data {
  SurfaceModel surface;
  std::vector<Section> basis;
  FieldTower tower;
};

F2Data f2_data(const ThreeIsogenyFamily& fam) {
  const auto tt = two_torsion(fam);
  const auto p2 = section_F2(fam);
  F2Data d{p2.surface.lift_to(tt.tower), {}, tt.tower};
  d.basis.push_back(Section::affine(p2.point.x().lift_to(tt.tower), p2.point.y().lift_to(tt.tower)));
  for (const auto& r : sections_Rij(fam, tt, {{2, 2}, {3, 3}, {2, 3}, {3, 2}})) d.basis.push_back(r.point);
  return d;
}

std::map<std::string, int> components(const SurfaceModel& s, const Section& p) {
  std::map<std::string, int> out;
  for (const auto& t : height_detail(s, p).terms) out[t.fiber.place.to_string()] = t.component;
  return out;
}

}  // namespace

TEST_CASE("Kodaira types from valuations") {
  struct Row {
    int vA, vB, vD;
    const char* name;
    int v_disc;
  };
  const Row rows[] = {{0, 0, 0, "I0", 0},  {0, 0, 3, "I3", 3},   {1, 1, 2, "II", 2},   {5, 1, 2, "II", 2},
                      {1, 2, 3, "III", 3}, {1, 7, 3, "III", 3},  {2, 2, 4, "IV", 4},   {3, 2, 4, "IV", 4},
                      {2, 3, 6, "I0*", 6}, {2, 3, 8, "I2*", 8},  {3, 4, 8, "IV*", 8},  {3, 5, 9, "III*", 9},
                      {4, 5, 10, "II*", 10}};
  for (const auto& r : rows) {
    const KodairaFiber f = fiber_from_valuations(r.vA, r.vB, r.vD);
    CHECK(f.name() == r.name);
    CHECK(f.v_disc == r.v_disc);
  }
}

TEST_CASE("fiber configurations of F^(1)") {
  const auto generic = classify_fibers(build_surface(invariants_from_family(rational_family(2, -1)), 1));
  CHECK(fiber_summary(generic) == "2 II* + 4 I1");
  CHECK(discriminant_degree(generic) == 24);
  // j(E1) = 0 turns the I1 fibers into type II.
  const auto cm = classify_fibers(build_surface(invariants_from_family(rational_family(6, -1)), 1));
  CHECK(fiber_summary(cm) == "2 II* + 2 II");
  CHECK(discriminant_degree(cm) == 24);
  // E1 and a quadratic twist: j1 = j2 gives an I2 fiber.
  const auto twist = classify_fibers(twisted_pair_surface(rational_family(1, 1).E1, FieldTower().from_int(2)));
  CHECK(fiber_summary(twist) == "2 II* + I2 + 2 I1");
  CHECK(discriminant_degree(twist) == 24);
}

TEST_CASE("discriminant degree is 24 on F^(1) and F^(2)") {
  for (const auto& [a, b] : testing::acceptance_pairs()) {
    const InoseData d = invariants_from_family(rational_family(a, b));
    CHECK(discriminant_degree(classify_fibers(build_surface(d, 1))) == 24);
    CHECK(discriminant_degree(classify_fibers(build_surface(d, 2))) == 24);
  }
}

TEST_CASE("h(P1) = 4 + 2 (P1 . O) with no correction") {
  for (const auto& [a, b] : testing::acceptance_pairs()) {
    const auto p1 = section_F1(rational_family(a, b));
    const HeightDetail h = height_detail(p1.surface, p1.point);
    CHECK(h.chi == 2);
    CHECK(h.intersection_with_zero == 1);
    CHECK(h.correction == 0);
    CHECK(h.height == 6);
  }
}

TEST_CASE("h(2P) = 4 h(P) on 20 sections") {
  int count = 0;
  for (const auto& [a, b] : testing::acceptance_pairs()) {
    const auto fam = rational_family(a, b);
    const auto p1 = section_F1(fam);
    CHECK(self_height(p1.surface, p1.surface.curve.smul(2, p1.point)) == 4 * self_height(p1.surface, p1.point));
    ++count;
    const F2Data d = f2_data(fam);
    for (std::size_t i : {0, 1, 3}) {
      const Section& p = d.basis[i];
      CHECK(self_height(d.surface, d.surface.curve.smul(2, p)) == 4 * self_height(d.surface, p));
      ++count;
    }
  }
  CHECK(count == 20);
}

TEST_CASE("h(3P) = 9 h(P) and polarization is bilinear") {
  const auto fam = rational_family(1, 1);
  const F2Data d = f2_data(fam);
  const auto& E = d.surface.curve;
  const Section& p = d.basis[0];
  const Section& q = d.basis[1];
  const Section& r = d.basis[3];
  CHECK(self_height(d.surface, E.smul(3, q)) == 9 * self_height(d.surface, q));
  CHECK(height_pair(d.surface, E.add(p, q), r) == height_pair(d.surface, p, r) + height_pair(d.surface, q, r));
  CHECK(height_pair(d.surface, p, q) == height_pair(d.surface, q, p));
  CHECK(height_pair(d.surface, E.neg(p), r) == -height_pair(d.surface, p, r));
}

TEST_CASE("component labels are additive") {
  const auto fam = rational_family(1, 1);
  const F2Data d = f2_data(fam);
  const auto& E = d.surface.curve;
  const auto fibers = classify_fibers(d.surface);
  for (std::size_t i = 0; i < d.basis.size(); ++i) {
    for (std::size_t j = i; j < d.basis.size(); ++j) {
      const auto ci = components(d.surface, d.basis[i]);
      const auto cj = components(d.surface, d.basis[j]);
      const auto cs = components(d.surface, E.add(d.basis[i], d.basis[j]));
      for (const auto& f : fibers) {
        if (f.kind != FiberKind::IVstar) continue;
        const std::string place = f.place.to_string();
        const auto get = [&](const std::map<std::string, int>& m) { return m.count(place) ? m.at(place) : 0; };
        CHECK((get(ci) + get(cj)) % 3 == get(cs));
      }
    }
  }
}

TEST_CASE("heights are invariant under rescaling") {
  Rng rng(51);
  const auto fam = rational_family(3, 2);
  const auto p1 = section_F1(fam);
  const FieldTower q;
  for (int n = 0; n < 4; ++n) {
    const NFElement l = rng.nonzero(q), m = rng.nonzero(q);
    const SurfaceModel s = normalize_surface(p1.surface, l, m, "sp");
    const Section p = normalize_section(p1.point, l, m, "sp");
    REQUIRE(s.curve.on_curve(p));
    CHECK(self_height(s, p) == 6);
    CHECK(fiber_summary(classify_fibers(s)) == fiber_summary(classify_fibers(p1.surface)));
  }
}

TEST_CASE("heights are invariant under Galois action") {
  const auto fam = rational_family(1, 1);
  const F2Data d = f2_data(fam);
  const std::size_t top = d.tower.num_steps() - 1;
  const NFElement g = d.tower.generator(top);
  REQUIRE(d.tower.step_degree(top) == 2);
  REQUIRE(d.tower.minpoly(top)[1].is_zero());
  const auto sigma = FieldAutomorphism::moving(d.tower, d.tower.generator_name(top), -g);
  std::vector<Section> images;
  for (const auto& p : d.basis) {
    const auto img = galois_image({d.surface, p, "basis"}, sigma, d.surface);
    images.push_back(img.point);
  }
  const auto before = gram_and_det(d.surface, d.basis);
  const auto after = gram_and_det(d.surface, images);
  CHECK(before.gram == after.gram);
  CHECK(before.det == after.det);
  CHECK(before.det == ratio(16, 3));
}

TEST_CASE("Gram matrices are symmetric with positive diagonal") {
  const F2Data d = f2_data(rational_family(-1, 2));
  const auto g = gram_and_det(d.surface, d.basis);
  for (std::size_t i = 0; i < g.gram.size(); ++i) {
    CHECK(g.gram[i][i] > 0);
    for (std::size_t j = 0; j < g.gram.size(); ++j) CHECK(g.gram[i][j] == g.gram[j][i]);
  }
  CHECK(check_lattice_identity(BigRational(16), BigRational(9)));
  CHECK_FALSE(check_lattice_identity(BigRational(16), BigRational(8)));
}
