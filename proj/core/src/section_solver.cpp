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

#include "inose/section_solver.hpp"

#include "inose/linalg.hpp"
#include "inose/roots.hpp"

namespace inose {

namespace {

using RPoly = Poly<RatFunc>;

RatFunc cst(const FieldTower& t, const NFElement& c) { return RatFunc::constant(t, "u", c.lift_to(t)); }

RPoly rpoly(const FieldTower& t, const std::string& var, std::vector<RatFunc> c) {
  return RPoly(RatFuncCtx{t, "u"}, var, std::move(c));
}

// phi_x numerator 3x^3 + 4a x^2 - 12ab x + 12ab^2 as a polynomial in x1.
RPoly phi_numerator(const ThreeIsogenyFamily& fam, const FieldTower& t) {
  const NFElement ab = fam.a * fam.b;
  return rpoly(t, "x1",
               {cst(t, ab * fam.b * BigRational(12)), cst(t, ab * BigRational(-12)), cst(t, fam.a * BigRational(4)),
                cst(t, t.from_int(3))});
}

// Checks f(zeta u) = f, then rewrites f in v = u^m.
RatFunc descend(const RatFunc& f, int m, const NFElement& zeta, const std::string& var) {
  const FieldTower& wt = zeta.tower();
  const RatFunc lifted = f.lift_to(wt);
  const RatFunc image = RatFunc::variable(wt, f.var()) * zeta;
  if (!(substitute(lifted, image) == lifted))
    fail(ErrorCode::NotInSubfield, "section is not invariant under the descent automorphism");
  return rewrite_in_power(f, m, var);
}

Section descend_point(const Section& p, int m, const NFElement& zeta, const std::string& var) {
  if (p.is_infinity()) return p;
  return Section::affine(descend(p.x(), m, zeta, var), descend(p.y(), m, zeta, var));
}


// Polynomial in x with coefficients in K[u], lowest degree first.
using XPoly = std::vector<UPoly>;

void trim(XPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

XPoly mul(const XPoly& f, const XPoly& g) {
  XPoly out(f.size() + g.size() - 1, UPoly(f.front().ctx(), f.front().var()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (!f[i].is_zero() && !g[j].is_zero()) out[i + j] += f[i] * g[j];
  return out;
}

// Sylvester determinant by fraction-free (Bareiss) elimination.
UPoly resultant_bareiss(XPoly f, XPoly g) {
  trim(f);
  trim(g);
  const UPoly zero(f.front().ctx(), f.front().var());
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  if (size == 0) return zero.one();
  Matrix<UPoly> s(size, std::vector<UPoly>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g[n - j];
  UPoly prev = zero.one();
  bool negate = false;
  for (std::size_t c = 0; c + 1 < size; ++c) {
    std::size_t piv = c;
    while (piv < size && s[piv][c].is_zero()) ++piv;
    if (piv == size) return zero;
    if (piv != c) {
      std::swap(s[piv], s[c]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < size; ++i) {
      for (std::size_t j = c + 1; j < size; ++j)
        s[i][j] = exact_div(s[i][j] * s[c][c] - s[i][c] * s[c][j], prev, "resultant_bareiss");
      s[i][c] = zero;
    }
    prev = s[c][c];
  }
  UPoly det = s[size - 1][size - 1];
  return negate ? -det : det;
}

// Pseudo-remainder of f by g (deg g >= 1) in K[u][x].
XPoly pseudo_remainder(XPoly f, const XPoly& g) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const UPoly lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (auto& c : f) c = c * g.back();
    for (std::size_t j = 0; j <= dg; ++j) f[shift + j] -= lead * g[j];
    trim(f);
  }
  return f;
}


}  // namespace

bool try_project(RatFunc& f, const FieldTower& base) {
  try {
    f = f.project_to(base);
    return true;
  } catch (const MathError& e) {
    if (e.code() == ErrorCode::NotInSubfield) return false;
    throw;
  }
}

Poly<RatFunc> isogeny_divisor_form(const ThreeIsogenyFamily& fam, Sign sign, const FieldTower& t) {
  const RatFunc u3 = RatFunc::variable(t, "u").pow(3);
  const RatFunc one = RatFunc::constant(t, "u", 1);
  const NFElement ab = fam.a * fam.b;
  const RatFunc lead = sign == Sign::Plus ? one - u3 : one + u3;
  return rpoly(t, "x1", {cst(t, ab * fam.b * BigRational(-8)), cst(t, ab * BigRational(4)), RatFunc(t, "u"), lead});
}

ConicCoeffs solve_conic(const ThreeIsogenyFamily& fam, Sign sign, const FieldTower& t) {
  const RatFunc u = RatFunc::variable(t, "u");
  const RatFunc m = u * u;
  const RatFunc k = (m + cst(t, t.from_int(3))) * fam.a.lift_to(t) * t.from_rational(BigRational(1, 3));
  const RatFunc zero(t, "u"), one = RatFunc::constant(t, "u", 1);
  Matrix<RatFunc> rows;
  // Restricted to the tangent x2 = m x1 + k z, the x1^2 and x1 z terms vanish.
  rows.push_back({one, m, m * m, zero, zero, zero});
  rows.push_back({zero, k, m * k * t.from_int(2), one, m, zero});
  // 9 x1^4 q(x1, phi_x(x1), 1) reduced modulo the divisor form.
  const RPoly p = isogeny_divisor_form(fam, sign, t);
  const RPoly N = phi_numerator(fam, t);
  const RPoly x = RPoly::variable(RatFuncCtx{t, "u"}, "x1");
  const RatFunc nine = cst(t, t.from_int(9)), three = cst(t, t.from_int(3));
  const std::array<RPoly, 6> basis{
      x.pow(6).scaled(nine), (x.pow(3) * N).scaled(three), N * N,
      x.pow(5).scaled(nine), (x.pow(2) * N).scaled(three), x.pow(4).scaled(nine)};
  std::array<RPoly, 6> rems{basis[0], basis[1], basis[2], basis[3], basis[4], basis[5]};
  for (auto& r : rems) r = rem(r, p);
  for (std::size_t deg = 0; deg < 3; ++deg) {
    std::vector<RatFunc> row;
    for (const auto& r : rems) row.push_back(r.coeff(deg));
    rows.push_back(std::move(row));
  }
  const auto kernel = nullspace(rows, RatFuncCtx{t, "u"}, 6);
  if (kernel.size() != 1)
    fail(ErrorCode::DegenerateSystem, "conic system has a kernel of dimension " + std::to_string(kernel.size()));
  std::vector<RatFunc> v = kernel.front();
  std::size_t first = 0;
  while (v[first].is_zero()) ++first;
  const RatFunc inv = v[first].inverse();
  ConicCoeffs out{{zero, zero, zero, zero, zero, zero}};
  for (std::size_t i = 0; i < 6; ++i) out.c[i] = v[i] * inv;
  return out;
}

ProjPoint<RatFunc> sixth_point(const ThreeIsogenyFamily& fam, Sign sign, const ConicCoeffs& conic,
                               const FieldTower& t) {
  // Everything below works with polynomials in u (denominators cleared), so
  // only the two final coordinates need a gcd.
  const UPoly zero(t, "u"), one = UPoly::constant(t, "u", t.one());
  UPoly L = one;
  for (const auto& c : conic.c) L = exact_div(L * c.den(), gcd(L, c.den()));
  std::vector<UPoly> C;
  for (const auto& c : conic.c) C.push_back(c.num() * exact_div(L, c.den()));
  if (C[2].is_zero() && !C[1].is_zero())
    fail(ErrorCode::ResidualNotRational, "conic is linear in x2 with an x1-dependent leading coefficient");
  const UPoly u6 = UPoly::monomial(t, "u", t.one(), 6);
  const NFElement &a = fam.a, &b = fam.b, &ap = fam.ap, &bp = fam.bp;
  auto k = [&](const NFElement& c) { return UPoly::constant(t, "u", c.lift_to(t)); };

  // Resultant in x2 of C_u and the conic at the integer samples x1 = v.
  constexpr int kSamples = 7;
  std::vector<UPoly> values;
  for (long v = 0; v < kSamples; ++v) {
    const NFElement x = t.from_int(v);
    const NFElement g = x * x * x + a * (x - b) * (x - b);
    XPoly cubic{k(ap * bp * bp) - u6.scaled(g.lift_to(t)), k(ap * bp * BigRational(-2)), k(ap), one};
    XPoly quad{C[0].scaled(x * x) + C[3].scaled(x) + C[5], C[1].scaled(x) + C[4], C[2]};
    values.push_back(resultant_bareiss(cubic, quad));
  }
  // Lagrange interpolation with rational weights.
  XPoly R(kSamples, zero);
  for (long i = 0; i < kSamples; ++i) {
    std::vector<BigRational> basis{1};
    BigRational den = 1;
    for (long j = 0; j < kSamples; ++j) {
      if (j == i) continue;
      std::vector<BigRational> next(basis.size() + 1);
      for (std::size_t e = 0; e < basis.size(); ++e) {
        next[e + 1] += basis[e];
        next[e] -= basis[e] * j;
      }
      basis = std::move(next);
      den *= i - j;
    }
    for (std::size_t e = 0; e < basis.size(); ++e)
      if (sgn(basis[e]) != 0) R[e] += values[i].scaled(t.from_rational(basis[e] / den));
  }
  trim(R);
  // R = (lead) * p(x1) * (x1 - r): the three points of the divisor form, the
  // residual point, and the double point at O outside the affine chart.
  const UPoly u3 = UPoly::monomial(t, "u", t.one(), 3);
  const UPoly p3 = sign == Sign::Plus ? one - u3 : one + u3;
  const XPoly p{k(a * b * b * BigRational(-8)), k(a * b * BigRational(4)), zero, p3};
  if (R.size() != 5) fail(ErrorCode::ResidualNotRational, "residual intersection has unexpected degree");
  const XPoly lin{R[3], R[4]};
  XPoly lhs = R;
  for (auto& c : lhs) c = c * p3;
  if (!(lhs == mul(p, lin)))
    fail(ErrorCode::ResidualNotRational, "residual intersection is not a single rational point");
  const RatFunc x1 = -RatFunc(R[3], R[4]);

  // x2 from the common root of the conic and C_u over x1 = N/D.
  const UPoly& N = x1.num();
  const UPoly& D = x1.den();
  const UPoly D2 = D * D, D3 = D2 * D;
  const XPoly quad{C[0] * N * N + C[3] * N * D + C[5] * D2, (C[1] * N + C[4] * D) * D, C[2] * D2};
  const UPoly nb = N - D.scaled(b.lift_to(t));
  const XPoly cubic{D3.scaled((ap * bp * bp).lift_to(t)) - u6 * (N * N * N + (D * nb * nb).scaled(a.lift_to(t))),
                    D3.scaled((ap * bp * BigRational(-2)).lift_to(t)), D3.scaled(ap.lift_to(t)), D3};
  const XPoly linear = pseudo_remainder(cubic, quad);
  if (linear.size() != 2 || linear[1].is_zero())
    fail(ErrorCode::ResidualNotRational, "x2 of the residual point is not determined");
  const UPoly &beta = linear[0], &alpha = linear[1];
  const RatFunc x2 = -RatFunc(beta, alpha);
  return {x1, x2, RatFunc::constant(t, "u", 1)};
}

Section phi_point(const ThreeIsogenyFamily& fam, Sign sign, const FieldTower& t) {
  const ConicCoeffs q = solve_conic(fam, sign, t);
  return psi_apply(build_psi(fam), sixth_point(fam, sign, q, t));
}

DescendedSection section_F1(const ThreeIsogenyFamily& fam) {
  const FieldTower& k = fam.tower;
  const FunctionCurve f6 = build_weier_f6(fam, k);
  const Section plus = phi_point(fam, Sign::Plus, k);
  const Section minus = phi_point(fam, Sign::Minus, k);
  const Section diff = f6.sub(plus, minus);
  auto [K, w] = with_cube_root_of_unity(k);
  // u -> -w u has order 6.
  const Section s = descend_point(diff, 6, -w, "s");
  SurfaceModel surf = build_surface(invariants_from_family(fam), 1, "s");
  surf.curve.require_on_curve(s);
  return {std::move(surf), s, "P1_from_phi"};
}

DescendedSection section_F2(const ThreeIsogenyFamily& fam) {
  const FieldTower& k = fam.tower;
  const FunctionCurve f6 = build_weier_f6(fam, k);
  const Section plus = phi_point(fam, Sign::Plus, k);
  auto [K, w] = with_cube_root_of_unity(k);
  Section obar = obar_section(fam, K, w);
  if (!obar.is_infinity()) {
    RatFunc x = obar.x(), y = obar.y();
    if (!try_project(x, k) || !try_project(y, k))
      fail(ErrorCode::NotInSubfield, "P_Obar is not defined over the base field");
    obar = Section::affine(x, y);
  }
  const Section diff = f6.sub(plus, obar);
  const Section s = descend_point(diff, 3, w, "t");
  SurfaceModel surf = build_surface(invariants_from_family(fam), 2, "t");
  surf.curve.require_on_curve(s);
  return {std::move(surf), s, "P2_from_phi"};
}

Section closed_form_F1(const ThreeIsogenyFamily& fam) {
  const FieldTower& t = fam.tower;
  const NFElement &a = fam.a, &b = fam.b, &ap = fam.ap, &bp = fam.bp;
  const NFElement A = a * ap, Bq = b * bp;
  auto c = [&](const NFElement& v) { return RatFunc::constant(t, "s", v); };
  auto q = [&](long n, long d = 1) { return t.from_rational(BigRational(n, d)); };
  const RatFunc s = RatFunc::variable(t, "s");
  const RatFunc S = (s * (b * b * q(1, 9)) + s.inverse() * (bp * bp * q(9))) * q(9, 2);
  const NFElement c2 = A * q(8) + Bq * q(81);
  const NFElement c1 = A * A * q(16, 9) - A * Bq * q(144) + Bq * Bq * q(729);
  const NFElement c0 = Bq * (A * A * q(80) - A * Bq * q(1944) + Bq * Bq * q(2187));
  const NFElement d3 = (A + Bq * q(9)) * q(36);
  const NFElement d2 = (A * A * q(16) - A * Bq * q(162) + Bq * Bq * q(2187)) * q(2);
  const NFElement d1 = Bq * (A * A * q(8) + A * Bq * q(135) - Bq * Bq * q(243)) * q(-108);
  const NFElement d0 =
      Bq * (A * A * A * q(128) - A * A * Bq * q(6912) + A * Bq * Bq * q(26244) - Bq * Bq * Bq * q(19683)) * q(-3);
  const RatFunc S2 = S * S, S3 = S2 * S, S4 = S3 * S;
  const RatFunc X = -(S3 * q(3) + S2 * c2 + S * c1 + c(c0)) / ((S - c(Bq * q(9))) * (A * q(16)));
  const RatFunc lin_p = s * b + c(bp * q(9)), lin_m = s * b - c(bp * q(9));
  const RatFunc Y = -(s * lin_p * (S4 * q(9) + S3 * d3 + S2 * d2 + S * d1 + c(d0))) /
                    (lin_m.pow(3) * (a * a * a * q(288)));
  return Section::affine(X, Y);
}

Section closed_form_F2(const ThreeIsogenyFamily& fam) {
  const FieldTower& t = fam.tower;
  const NFElement &a = fam.a, &b = fam.b;
  // The closed form uses 4a + 27b, i.e. nine times the family's b'.
  auto q = [&](long n, long d = 1) { return t.from_rational(BigRational(n, d)); };
  const NFElement bp = fam.bp * q(9);
  auto c = [&](const NFElement& v) { return RatFunc::constant(t, "t", v); };
  const RatFunc tv = RatFunc::variable(t, "t");
  const RatFunc T = tv * b - tv.inverse() * bp;
  // Stated on the model scaled by 2; (X, Y) -> (X/4, Y/8) lands on build_surface(., 2).
  const RatFunc X = T * T + T * (a * q(4)) + c((a * a + b * bp * q(3)) * q(4, 3));
  const RatFunc Y = (tv * b + tv.inverse() * bp) * (T * T + T * (a * q(6)) + c((a * a * q(2) + b * bp) * q(4)));
  return Section::affine(X * q(1, 4), Y * q(1, 8));
}

std::vector<DescendedSection> sections_Rij(const ThreeIsogenyFamily& fam, const TwoTorsionData& tt,
                                           const std::vector<std::pair<int, int>>& pairs) {
  const FieldTower& k2 = tt.tower;
  auto [K, w] = with_cube_root_of_unity(k2);
  const TransformPsi psi = build_psi(fam);
  const FunctionCurve f6 = build_weier_f6(fam, k2);
  auto point = [&](int i, int j) {
    return psi_apply(psi, {cst(k2, tt.alphas.at(i - 1)), cst(k2, tt.betas.at(j - 1)), RatFunc::constant(k2, "u", 1)});
  };
  const Section r11 = point(1, 1);
  SurfaceModel surf = build_surface(invariants_from_family(fam), 2, "t").lift_to(k2);
  std::vector<DescendedSection> out;
  for (auto [i, j] : pairs) {
    const Section d = f6.sub(point(i, j), r11);
    const Section s = descend_point(d, 3, w, "t");
    surf.curve.require_on_curve(s);
    out.push_back({surf, s, "R" + std::to_string(i) + std::to_string(j)});
  }
  return out;
}

DescendedSection galois_image(const DescendedSection& sec, const FieldAutomorphism& sigma,
                              const SurfaceModel& target, const SurfaceMap& map) {
  Section p = sec.point;
  if (!p.is_infinity()) {
    const FieldTower& t = sigma.tower();
    RatFunc x = p.x().lift_to(t).map_coeffs(sigma), y = p.y().lift_to(t).map_coeffs(sigma);
    if (map.base_image) {
      x = substitute(x, *map.base_image);
      y = substitute(y, *map.base_image);
    }
    if (map.x_mul) x = x * *map.x_mul;
    if (map.y_mul) y = y * *map.y_mul;
    p = Section::affine(x, y);
  }
  const SurfaceModel tgt = target.lift_to(p.is_infinity() ? target.curve.a6().tower() : p.x().tower());
  if (!tgt.curve.on_curve(p)) fail(ErrorCode::ImageOffCurve, "image section is not on the target surface");
  return {tgt, p, "galois_image(" + sec.provenance + ")"};
}

}  // namespace inose
