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


// Acceptance run: one PASS/FAIL line per criterion, every comparison exact.
// Exit status 0 only when all eight criteria pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "inose/errors.hpp"
#include "inose/mw_lattice.hpp"
#include "inose/named_examples.hpp"
#include "inose/roots.hpp"
#include "inose/section_solver.hpp"
#include "test_support.hpp"

using namespace inose;
using inose::testing::Rng;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

Matrix<BigRational> thirds(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<BigRational> m;
  for (const auto& row : rows) {
    std::vector<BigRational> r;
    for (long v : row) r.push_back(ratio(v, 3));
    m.push_back(std::move(r));
  }
  return m;
}

ThreeIsogenyFamily rational_family(long a, long b) {
  const FieldTower q;
  return build_family(q.from_int(a), q.from_int(b));
}

std::string pair_name(long a, long b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

// Reports are shared between criteria; x323 is the slow one.
const ExampleReport& named(const std::string& name) {
  static std::map<std::string, ExampleReport> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, run_named(name)).first;
  return it->second;
}

const std::vector<ExampleReport>& families() {
  static const std::vector<ExampleReport> reports = [] {
    std::vector<ExampleReport> out;
    const FieldTower q;
    for (const auto& [a, b] : testing::acceptance_pairs()) out.push_back(run_family(q.from_int(a), q.from_int(b)));
    return out;
  }();
  return reports;
}

void require_checks(Outcome& o, const ExampleReport& r, const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    const CheckResult* c = r.find(id);
    o.require(c != nullptr, id + " missing");
    if (c) o.require(c->pass, id + " failed (" + c->detail + ")");
  }
}

Outcome criterion1() {
  Outcome o;
  for (const auto& [a, b] : testing::acceptance_pairs()) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto fam = rational_family(a, b);
    const std::string p = pair_name(a, b);
    o.require(verify_isogeny(fam.E1, fam.E2, fam.phi), p + " isogeny");
    const auto p1 = section_F1(fam);
    const auto p2 = section_F2(fam);
    o.require(p1.surface.curve.on_curve(p1.point), p + " P1 off F1");
    o.require(p2.surface.curve.on_curve(p2.point), p + " P2 off F2");
    o.require(p1.point == closed_form_F1(fam), p + " P1 != closed form");
    o.require(p2.point == closed_form_F2(fam), p + " P2 != closed form");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs <= 60, p + " took " + std::to_string(secs) + " s");
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& [a, b] : testing::acceptance_pairs()) {
    const auto fam = rational_family(a, b);
    const auto p1 = section_F1(fam);
    const auto p2 = section_F2(fam);
    const BigRational h1 = self_height(p1.surface, p1.point), h2 = self_height(p2.surface, p2.point);
    o.require(h1 == 6, pair_name(a, b) + " h(P1) = " + to_string(h1));
    o.require(h2 == 4, pair_name(a, b) + " h(P2) = " + to_string(h2));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto expect =
      thirds({{12, 0, 0, -3, -3}, {0, 4, 2, 0, 0}, {0, 2, 4, 0, 0}, {-3, 0, 0, 4, 2}, {-3, 0, 0, 2, 4}});
  const auto pairs = testing::acceptance_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& f2 = families()[i].surfaces.at(1);
    const std::string p = pair_name(pairs[i].first, pairs[i].second);
    o.require(f2.gram == expect, p + " Gram differs");
    o.require(f2.det == ratio(16, 3), p + " det = " + to_string(f2.det));
    o.require(determinant(expect) == ratio(16, 3), "expected matrix has det " + to_string(determinant(expect)));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& r = named("x333");
  require_checks(o, r, {"x333.f1.equation", "x333.f1.p1", "x333.f1.gram", "x333.f2.gram", "x333.f2.det",
                        "x333.f2.identity"});
  o.require(r.surfaces.at(0).gram == Matrix<BigRational>{{6, 3}, {3, 6}}, "F1 Gram");
  o.require(r.surfaces.at(1).gram == thirds({{12, 6, 0, 0, -3, -3},
                                             {6, 12, 0, 0, 0, -3},
                                             {0, 0, 4, 2, 0, 0},
                                             {0, 0, 2, 4, 0, 0},
                                             {-3, 0, 0, 0, 4, 2},
                                             {-3, -3, 0, 0, 2, 4}}),
            "F2 Gram");
  o.require(r.surfaces.at(1).det == 12, "det = " + to_string(r.surfaces.at(1).det));
  o.require(r.surfaces.at(1).det == ratio(16, 9) * ratio(27, 4), "lattice identity");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto& r = named("x323");
  require_checks(o, r, {"x323.models", "x323.f1.equation", "x323.f1.p1", "x323.f1.p1_phi2", "x323.f1.phi2_direct",
                        "x323.f1.gram", "x323.f2.gram", "x323.f2.det", "x323.f2.identity"});
  o.require(r.surfaces.at(0).gram == Matrix<BigRational>{{6, 2}, {2, 6}}, "F1 Gram");
  o.require(r.surfaces.at(1).det == ratio(128, 9), "det = " + to_string(r.surfaces.at(1).det));
  o.require(determinant(r.surfaces.at(1).gram) == ratio(128, 9), "det of the reported Gram");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto& r = named("x303");
  require_checks(o, r, {"x303.f1.p1", "x303.f1.gram", "x303.f2.gram", "x303.f2.det"});
  o.require(r.surfaces.at(0).gram == Matrix<BigRational>{{6, 0}, {0, 6}}, "F1 Gram");
  o.require(r.surfaces.at(1).gram == thirds({{12, 0, 0, 0, -3, -3},
                                             {0, 12, -3, -3, 0, 0},
                                             {0, -3, 4, 2, 0, 0},
                                             {0, -3, 2, 4, 0, 0},
                                             {-3, 0, 0, 0, 4, 2},
                                             {-3, 0, 0, 0, 2, 4}}),
            "F2 Gram");
  o.require(r.surfaces.at(1).det == 16, "det = " + to_string(r.surfaces.at(1).det));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto table = [&](const std::string& what, const std::vector<KodairaFiber>& fibers, const std::string& want) {
    o.require(fiber_summary(fibers) == want, what + ": " + fiber_summary(fibers));
    o.require(discriminant_degree(fibers) == 24, what + ": sum v(Delta) = " + std::to_string(discriminant_degree(fibers)));
  };
  table("x323 F1", named("x323").surfaces.at(0).fibers, "2 II* + 4 I1");
  table("x333 F1", named("x333").surfaces.at(0).fibers, "2 II* + 2 II");
  table("twist", classify_fibers(twisted_pair_surface(rational_family(1, 1).E1, FieldTower().from_int(2))),
        "2 II* + I2 + 2 I1");
  return o;
}

Outcome criterion8() {
  Outcome o;
  Rng rng(2026);

  // Associativity on y^2 = x^3 - t^2 x + t^2 with sections (0, t), (1, 1), (t, t).
  {
    const FieldTower q;
    const RatFunc t = RatFunc::variable(q, "t"), one = RatFunc::constant(q, "t", 1), zero(q, "t");
    const FunctionCurve E = FunctionCurve::short_form(-(t * t), t * t);
    const std::vector<Section> gens{Section::affine(zero, t), Section::affine(one, one), Section::affine(t, t)};
    std::vector<Section> pool;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          pool.push_back(E.add(E.add(E.smul(a, gens[0]), E.smul(b, gens[1])), E.smul(c, gens[2])));
    int bad = 0;
    for (int n = 0; n < 200; ++n) {
      const auto& p = pool[rng.small(0, 26)];
      const auto& q2 = pool[rng.small(0, 26)];
      const auto& r = pool[rng.small(0, 26)];
      bad += !(E.add(E.add(p, q2), r) == E.add(p, E.add(q2, r)));
    }
    o.require(bad == 0, std::to_string(bad) + " non-associative triples");
  }

  // h(2P) = 4h(P) on 20 sections: P1, P2, R22 and R23 of each family.
  {
    int count = 0;
    for (const auto& r : families()) {
      const auto& f1 = r.surfaces.at(0);
      const auto& f2 = r.surfaces.at(1);
      std::vector<std::pair<const SurfaceRecord*, std::size_t>> picks{{&f1, 0}, {&f2, 0}, {&f2, 1}, {&f2, 3}};
      for (const auto& [rec, i] : picks) {
        const Section& p = rec->basis.at(i).point;
        const BigRational h2 = self_height(rec->model, rec->model.curve.smul(2, p));
        o.require(h2 == 4 * rec->gram[i][i], r.name + " " + rec->basis[i].name + ": h(2P) = " + to_string(h2));
        ++count;
      }
    }
    o.require(count == 20, "sampled " + std::to_string(count) + " sections");
  }

  // Rescale and Galois invariance.
  {
    const auto& f1 = families().at(2).surfaces.at(0);
    const FieldTower q;
    for (int n = 0; n < 3; ++n) {
      const NFElement l = rng.nonzero(q), m = rng.nonzero(q);
      const SurfaceModel s = normalize_surface(f1.model, l, m, "sp");
      const Section p = normalize_section(f1.basis[0].point, l, m, "sp");
      o.require(self_height(s, p) == f1.gram[0][0], "height changed under rescale");
    }
    const auto& f2 = families().at(0).surfaces.at(1);
    const FieldTower& k = f2.model.lambda.tower();
    const std::size_t top = k.num_steps() - 1;
    const auto sigma = FieldAutomorphism::moving(k, k.generator_name(top), -k.generator(top));
    std::vector<Section> images;
    for (const auto& b : f2.basis) images.push_back(galois_image({f2.model, b.point, b.provenance}, sigma, f2.model).point);
    o.require(gram_and_det(f2.model, images).gram == f2.gram, "Gram changed under Galois action");
  }

  // verify_psi for every family, including one over Q(sqrt 2).
  {
    for (const auto& [a, b] : testing::acceptance_pairs())
      o.require(verify_psi(rational_family(a, b)), "verify_psi " + pair_name(a, b));
    const FieldTower k = testing::q_sqrt2();
    o.require(verify_psi(build_family(k.one() + k.generator("r2"), k.from_int(2))), "verify_psi over Q(sqrt 2)");
  }

  // rewrite_in_power round trip for m = 2, 3, 6.
  {
    const FieldTower k = testing::q_w_c();
    const NFElement w = k.generator("w");
    const std::vector<std::pair<int, NFElement>> roots{{2, -k.one()}, {3, w}, {6, -w}};
    for (const auto& [m, zeta] : roots) {
      for (int n = 0; n < 5; ++n) {
        const RatFunc r = rng.ratfunc(k, "s", 1 + n % 3, n % 3);
        const RatFunc power(UPoly::monomial(k, "u", k.one(), static_cast<std::size_t>(m)));
        const RatFunc f = substitute(r, power);
        const RatFunc back = rewrite_in_power(f, m, "s", zeta);
        o.require(back == r && substitute(back, power) == f, "rewrite_in_power m = " + std::to_string(m));
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"family pipeline: isogeny, P1 and P2 equal their closed forms", criterion1},
      {"h(P1) = 6 and h(P2) = 4", criterion2},
      {"generic 5x5 Gram matrix, det 16/3", criterion3},
      {"x333: F1, P1, Gram (6 3; 3 6), 6x6 Gram, det 12, lattice identity", criterion4},
      {"x323: P1, conjugate section, Gram (6 2; 2 6), det 128/9, model reconciliation", criterion5},
      {"x303: P1, Gram (6 0; 0 6), 6x6 Gram, det 16", criterion6},
      {"fiber tables and sum v(Delta) = 24", criterion7},
      {"property suites", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!o.pass) std::cout << "\n    " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
