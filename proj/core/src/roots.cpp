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

#include "inose/roots.hpp"

#include <cmath>
#include <cstddef>

namespace inose {

namespace {

using cd = std::complex<double>;

cd eval_chunk(std::span<const BigRational> chunk, std::size_t steps, const FieldTower& tower,
              const EmbeddingValues& gens) {
  if (steps == 0) return cd(chunk[0].get_d(), 0.0);
  const std::size_t d = tower.step_degree(steps - 1);
  const std::size_t m = chunk.size() / d;
  cd acc = 0;
  for (std::size_t j = d; j-- > 0;)
    acc = acc * gens[steps - 1] + eval_chunk(chunk.subspan(j * m, m), steps - 1, tower, gens);
  return acc;
}

cd horner(const std::vector<cd>& c, cd z) {
  cd acc = 0;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
  return acc;
}

// Solves a small dense complex system; returns false when singular.
bool solve(std::vector<std::vector<cd>> m, std::vector<cd>& rhs) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::abs(m[i][c]) > std::abs(m[p][c])) p = i;
    if (std::abs(m[p][c]) < 1e-300) return false;
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      const cd f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return true;
}

}  // namespace

std::complex<double> embed_double(const NFElement& x, const EmbeddingValues& gens) {
  return eval_chunk(x.coeffs(), x.tower().num_steps(), x.tower(), gens);
}

std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs) {
  std::vector<cd> c = coeffs;
  while (!c.empty() && c.back() == cd(0)) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t n = c.size() - 1;
  const cd lead = c.back();
  for (auto& x : c) x /= lead;
  double radius = 0;
  for (std::size_t j = 0; j < n; ++j) radius = std::max(radius, std::abs(c[j]));
  radius = 1 + radius;
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius * 0.9, 2 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(n));
  // Durand-Kerner iteration.
  for (int it = 0; it < 2000; ++it) {
    double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      cd den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      if (den == cd(0)) den = 1e-30;
      const cd step = horner(c, z[k]) / den;
      z[k] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15 * radius) break;
  }
  // Newton polish.
  std::vector<cd> d;
  for (std::size_t j = 1; j < c.size(); ++j) d.push_back(c[j] * static_cast<double>(j));
  for (auto& r : z)
    for (int it = 0; it < 3; ++it) {
      const cd fp = horner(d, r);
      if (std::abs(fp) > 0) r -= horner(c, r) / fp;
    }
  return z;
}

std::vector<EmbeddingValues> all_embeddings(const FieldTower& tower) {
  std::vector<EmbeddingValues> out{EmbeddingValues{}};
  for (std::size_t k = 0; k < tower.num_steps(); ++k) {
    const auto mp = tower.minpoly(k);
    std::vector<EmbeddingValues> next;
    for (const auto& e : out) {
      std::vector<cd> c;
      for (const auto& x : mp) c.push_back(eval_chunk(x.coeffs(), k, tower.prefix(k), e));
      for (const auto& r : complex_roots(c)) {
        EmbeddingValues v = e;
        v.push_back(r);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

BigRational rational_approximation(double x, long max_den) {
  if (!std::isfinite(x)) return 0;
  // Convergents h/k of the continued fraction of x.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(r);
    mpz_class a(fl);
    mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - fl;
    if (std::abs(frac) < 1e-12) break;
    r = 1 / frac;
  }
  BigRational q(h1, k1);
  q.canonicalize();
  return q;
}

std::vector<NFElement> roots_in_tower(const Poly<NFElement>& f) {
  std::vector<NFElement> found;
  if (f.degree() <= 0) return found;
  const FieldTower& tower = f.ctx();
  auto add_root = [&](const NFElement& r) {
    for (const auto& s : found)
      if (s == r) return;
    if (f.eval(r).is_zero()) found.push_back(r);
  };
  if (f.degree() == 1) {
    add_root(-f.coeffs()[0] / f.coeffs()[1]);
    return found;
  }
  const std::size_t n = tower.degree();
  const auto embs = all_embeddings(tower);
  // basis[i] is the i-th power-product basis element.
  std::vector<std::vector<cd>> m(n, std::vector<cd>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigRational> e(n);
    e[i] = 1;
    const NFElement b(tower, e);
    for (std::size_t k = 0; k < n; ++k) m[k][i] = embed_double(b, embs[k]);
  }
  std::vector<std::vector<cd>> per_embedding;
  for (const auto& e : embs) {
    std::vector<cd> c;
    for (const auto& x : f.coeffs()) c.push_back(embed_double(x, e));
    per_embedding.push_back(complex_roots(c));
  }
  const std::size_t d = static_cast<std::size_t>(f.degree());
  // Over Q the roots themselves suffice.
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    std::vector<cd> rhs(n);
    for (std::size_t k = 0; k < n; ++k) rhs[k] = per_embedding[k][choice[k]];
    bool ok = solve(m, rhs);
    for (std::size_t i = 0; ok && i < n; ++i)
      if (std::abs(rhs[i].imag()) > 1e-6 * (1 + std::abs(rhs[i].real()))) ok = false;
    if (ok) {
      for (long max_den : {1000L, 1000000L, 100000000L}) {
        std::vector<BigRational> coords;
        for (std::size_t i = 0; i < n; ++i) coords.push_back(rational_approximation(rhs[i].real(), max_den));
        const NFElement cand(tower, coords);
        if (f.eval(cand).is_zero()) {
          add_root(cand);
          break;
        }
      }
    }
    std::size_t pos = 0;
    while (pos < n && ++choice[pos] == d) choice[pos++] = 0;
    if (pos == n) break;
    if (found.size() == d) break;
  }
  return found;
}

std::pair<FieldTower, NFElement> with_cube_root_of_unity(const FieldTower& tower,
                                                         const std::string& name) {
  const Poly<NFElement> cyclo(tower, "x", {tower.one(), tower.one(), tower.one()});
  const auto roots = roots_in_tower(cyclo);
  if (!roots.empty()) {
    // Prefer the root with positive imaginary part in the first embedding.
    const auto emb = all_embeddings(tower).front();
    for (const auto& r : roots)
      if (embed_double(r, emb).imag() > 0) return {tower, r};
    return {tower, roots.front()};
  }
  FieldTower ext = tower.extend(name, std::vector<BigRational>{1, 1, 1});
  return {ext, ext.generator(name)};
}

}  // namespace inose
