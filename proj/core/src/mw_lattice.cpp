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

#include "inose/mw_lattice.hpp"

#include <algorithm>
#include <climits>
#include <map>

namespace inose {

namespace {

constexpr int kInfinite = INT_MAX / 4;

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

int val(const RatFunc& f, const Place& v) { return f.is_zero() ? kInfinite : valuation(f, v); }

// Short Weierstrass form y^2 = x^3 + A x + B of the curve and the matching
// point map.
struct ShortModel {
  RatFunc A, B;
  std::array<RatFunc, 5> a;
  bool already_short;

  explicit ShortModel(const FunctionCurve& E)
      : A(-E.c4() * E.integer(27)), B(-E.c6() * E.integer(54)),
        a{E.a1(), E.a2(), E.a3(), E.a4(), E.a6()},
        already_short(E.a1().is_zero() && E.a2().is_zero() && E.a3().is_zero()) {
    if (already_short) {
      A = E.a4();
      B = E.a6();
    }
  }

  Section map(const Section& p) const {
    if (p.is_infinity() || already_short) return p;
    const RatFunc& x = p.x();
    const RatFunc& y = p.y();
    const FieldTower& t = x.tower();
    const RatFunc b2 = a[0] * a[0] + a[1] * t.from_int(4);
    return Section::affine(x * t.from_int(36) + b2 * t.from_int(3),
                           (y * t.from_int(2) + a[0] * x + a[2]) * t.from_int(108));
  }

  RatFunc disc() const {
    const FieldTower& t = A.tower();
    return (A * A * A * t.from_int(4) + B * B * t.from_int(27)) * t.from_int(-16);
  }
};

// Valuations of the locally minimal integral model at one place.
struct LocalModel {
  Place place;
  int degree = 1;
  int shift = 0;  // the model is scaled by pi^shift: (x, y) -> (x / pi^2k, y / pi^3k)
  KodairaFiber fiber;
};

LocalModel local_model(const ShortModel& m, const RatFunc& disc, const Place& place, int degree) {
  const int vA = val(m.A, place), vB = val(m.B, place), vD = val(disc, place);
  const int k = std::min(vA >= kInfinite ? kInfinite : floor_div(vA, 4), vB >= kInfinite ? kInfinite : floor_div(vB, 6));
  LocalModel lm;
  lm.place = place;
  lm.degree = degree;
  lm.shift = k;
  lm.fiber = fiber_from_valuations(vA >= kInfinite ? kInfinite : vA - 4 * k, vB >= kInfinite ? kInfinite : vB - 6 * k,
                                   vD - 12 * k);
  lm.fiber.place = place;
  lm.fiber.degree = degree;
  return lm;
}

std::vector<UPoly> surface_polys(const ShortModel& m, const RatFunc& disc) {
  return {m.A.num(), m.A.den(), m.B.num(), m.B.den(), disc.num(), disc.den()};
}

// Places in a stable order: finite by degree then text, infinity last.
std::vector<Place> places_of(const std::vector<UPoly>& polys) {
  std::vector<UPoly> basis = gcd_free_basis(polys);
  std::sort(basis.begin(), basis.end(), [](const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  std::vector<Place> out;
  for (const auto& f : basis) out.push_back(Place::finite(f));
  out.push_back(Place::infinity());
  return out;
}

int place_degree(const Place& p) { return p.is_infinity() ? 1 : p.poly->degree(); }

// f / pi^v(f) at a place of degree one.
NFElement leading_residue(const RatFunc& f, const Place& place) {
  if (place.is_infinity()) return f.num().lead() * f.den().lead().inverse();
  const UPoly& p = *place.poly;
  const NFElement root = -p.coeff(0);
  auto strip = [&](UPoly g) {
    while (true) {
      auto [q, r] = divrem(g, p);
      if (!r.is_zero()) return g;
      g = std::move(q);
    }
  };
  const UPoly n = strip(f.num()), d = strip(f.den());
  auto ev = [&](const UPoly& g) {
    NFElement acc = root.tower().from_int(0);
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it) acc = acc * root + *it;
    return acc;
  };
  return ev(n) * ev(d).inverse();
}

bool positive(const NFElement& x) {
  for (const auto& c : x.coeffs())
    if (sgn(c) != 0) return sgn(c) > 0;
  return false;
}

const char* kind_name(FiberKind k) {
  switch (k) {
    case FiberKind::I: return "I";
    case FiberKind::II: return "II";
    case FiberKind::III: return "III";
    case FiberKind::IV: return "IV";
    case FiberKind::Istar: return "I*";
    case FiberKind::IVstar: return "IV*";
    case FiberKind::IIIstar: return "III*";
    case FiberKind::IIstar: return "II*";
  }
  return "?";
}

}  // namespace

std::string KodairaFiber::name() const {
  if (kind == FiberKind::I) return "I" + std::to_string(n);
  if (kind == FiberKind::Istar) return "I" + std::to_string(n) + "*";
  return kind_name(kind);
}

KodairaFiber fiber_from_valuations(int vA, int vB, int vD) {
  KodairaFiber f;
  f.v_disc = vD;
  if (vA < 0 || vB < 0 || vD < 0) fail(ErrorCode::UnhandledType, "model is not integral");
  if (vD == 0) return f;
  if (vA == 0 || vB == 0) {
    // c4 is a unit: multiplicative reduction.
    f.kind = FiberKind::I;
    f.n = vD;
    f.component_order = vD;
    return f;
  }
  if (vA == 2 && vB == 3 && vD >= 6) {
    f.kind = FiberKind::Istar;
    f.n = vD - 6;
    f.component_order = 4;
    return f;
  }
  switch (vD) {
    case 2: f.kind = FiberKind::II; f.component_order = 1; break;
    case 3: f.kind = FiberKind::III; f.component_order = 2; break;
    case 4: f.kind = FiberKind::IV; f.component_order = 3; break;
    case 6: f.kind = FiberKind::Istar; f.component_order = 4; break;
    case 8: f.kind = FiberKind::IVstar; f.component_order = 3; break;
    case 9: f.kind = FiberKind::IIIstar; f.component_order = 2; break;
    case 10: f.kind = FiberKind::IIstar; f.component_order = 1; break;
    default:
      fail(ErrorCode::UnhandledType, "additive reduction with v(disc) = " + std::to_string(vD) +
                                          " on a model claimed minimal");
  }
  return f;
}

std::vector<UPoly> gcd_free_basis(const std::vector<UPoly>& polys) {
  std::vector<UPoly> basis;
  auto add = [&](UPoly g) {
    // Refine g against the current basis until it is coprime to everything.
    std::vector<UPoly> pending{std::move(g)};
    while (!pending.empty()) {
      UPoly h = std::move(pending.back());
      pending.pop_back();
      if (h.degree() <= 0) continue;
      h = make_monic(h);
      bool split = false;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const UPoly d = gcd(h, basis[i]);
        if (d.degree() <= 0) continue;
        const UPoly b = basis[i];
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        pending.push_back(d);
        pending.push_back(exact_div(b, d));
        pending.push_back(exact_div(h, d));
        split = true;
        break;
      }
      if (!split) basis.push_back(h);
    }
  };
  for (const auto& p : polys) {
    if (p.degree() <= 0) continue;
    for (auto& [f, e] : squarefree_decomposition(p)) add(f);
  }
  return basis;
}

std::vector<KodairaFiber> classify_fibers(const SurfaceModel& s) {
  const ShortModel m(s.curve);
  const RatFunc disc = m.disc();
  std::vector<KodairaFiber> out;
  for (const auto& place : places_of(surface_polys(m, disc))) {
    const LocalModel lm = local_model(m, disc, place, place_degree(place));
    if (lm.fiber.v_disc > 0) out.push_back(lm.fiber);
  }
  return out;
}

std::string fiber_summary(const std::vector<KodairaFiber>& fibers) {
  // Most singular first, by v(disc), then by name.
  std::map<std::pair<int, std::string>, int, std::greater<>> counts;
  for (const auto& f : fibers) counts[{f.v_disc, f.name()}] += f.degree;
  std::string out;
  for (const auto& [key, c] : counts) {
    if (!out.empty()) out += " + ";
    out += (c == 1 ? "" : std::to_string(c) + " ") + key.second;
  }
  return out;
}

int discriminant_degree(const std::vector<KodairaFiber>& fibers) {
  int total = 0;
  for (const auto& f : fibers) total += f.degree * f.v_disc;
  return total;
}

HeightDetail height_detail(const SurfaceModel& s, const Section& p0) {
  const ShortModel m(s.curve);
  const RatFunc disc = m.disc();
  const Section p = m.map(p0);
  HeightDetail h;
  std::vector<UPoly> polys = surface_polys(m, disc);
  std::optional<RatFunc> grad;
  if (!p.is_infinity()) {
    grad = p.x() * p.x() * p.x().tower().from_int(3) + m.A;
    for (const RatFunc* f : {&p.x(), &p.y(), static_cast<const RatFunc*>(&*grad)}) {
      polys.push_back(f->num());
      polys.push_back(f->den());
    }
  }
  int total_disc = 0;
  for (const auto& place : places_of(polys)) {
    const LocalModel lm = local_model(m, disc, place, place_degree(place));
    total_disc += lm.degree * lm.fiber.v_disc;
    if (p.is_infinity()) continue;
    const int k = lm.shift;
    const int vx = val(p.x(), place), vy = val(p.y(), place);
    LocalTerm term{lm.fiber, 0, 0, 0};
    const int vx_min = vx >= kInfinite ? kInfinite : vx - 2 * k;
    const int vy_min = vy >= kInfinite ? kInfinite : vy - 3 * k;
    if (vx_min < 0) {
      term.intersection = ratio(-vx_min, 2);
    } else if (lm.fiber.v_disc > 0) {
      const int vg = val(*grad, place);
      const bool singular = (vg >= kInfinite || vg - 4 * k > 0) && vy_min > 0;
      if (singular) {
        const KodairaFiber& f = lm.fiber;
        switch (f.kind) {
          case FiberKind::I: {
            const BigRational alpha = std::min(BigRational(vy_min), ratio(f.n, 2));
            term.contribution = alpha * (f.n - alpha) / f.n;
            term.component = static_cast<int>(alpha.get_num().get_si());
            break;
          }
          case FiberKind::III: term.contribution = BigRational(1, 2); term.component = 1; break;
          case FiberKind::IIIstar: term.contribution = BigRational(3, 2); term.component = 1; break;
          case FiberKind::IV:
          case FiberKind::IVstar:
            term.contribution = f.kind == FiberKind::IV ? BigRational(2, 3) : BigRational(4, 3);
            term.component = lm.degree == 1 && positive(leading_residue(p.y(), place)) ? 1 : 2;
            break;
          case FiberKind::Istar:
            if (f.n != 0)
              fail(ErrorCode::UnhandledType, "section through the singular point of an I" + std::to_string(f.n) +
                                                 "* fiber");
            term.contribution = 1;
            term.component = 1;
            break;
          case FiberKind::II:
          case FiberKind::IIstar:
            fail(ErrorCode::UnhandledType, "section through the singular point of a " + f.name() + " fiber");
        }
      }
    }
    if (sgn(term.intersection) != 0 || sgn(term.contribution) != 0) {
      h.intersection_with_zero += term.intersection * lm.degree;
      h.correction += term.contribution * lm.degree;
      h.terms.push_back(std::move(term));
    }
  }
  if (total_disc % 12 != 0) fail(ErrorCode::UnhandledType, "discriminant degree is not a multiple of 12");
  h.chi = total_disc / 12;
  if (p.is_infinity()) return h;
  h.height = 2 * h.chi + 2 * h.intersection_with_zero - h.correction;
  return h;
}

BigRational self_height(const SurfaceModel& s, const Section& p) { return height_detail(s, p).height; }

BigRational height_pair(const SurfaceModel& s, const Section& p, const Section& q) {
  const Section sum = s.curve.add(p, q);
  return (self_height(s, sum) - self_height(s, p) - self_height(s, q)) / 2;
}

GramResult gram_and_det(const SurfaceModel& s, const std::vector<Section>& basis) {
  const std::size_t n = basis.size();
  std::vector<BigRational> diag;
  for (const auto& p : basis) diag.push_back(self_height(s, p));
  Matrix<BigRational> g(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = diag[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const BigRational hs = self_height(s, s.curve.add(basis[i], basis[j]));
      g[i][j] = g[j][i] = (hs - diag[i] - diag[j]) / 2;
    }
  }
  BigRational det = n == 0 ? BigRational(1) : determinant(g);
  return {std::move(g), std::move(det)};
}

bool check_lattice_identity(const BigRational& det_F2, const BigRational& det_hom) {
  return det_F2 == BigRational(16, 9) * det_hom;
}

}  // namespace inose
