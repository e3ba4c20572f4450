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

#include <cstdint>
#include <optional>
#include <vector>

#include "inose/poly.hpp"

namespace inose {

namespace {

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

// Degree of gcd(a, b) over F_p.
int gcd_degree(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t li = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t c = a.back() * li % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool image(const Poly<NFElement>& f, ModPoly& out) {
  out.clear();
  for (const auto& c : f.coeffs()) {
    auto r = reduce_mod(c);
    if (!r) return false;
    out.push_back(*r);
  }
  return true;
}


// ------------------------------------------------------- modular gcd

// The tower with its minimal polynomials reduced modulo p: a product of
// finite fields when p is unramified, in general just a ring.
class ModTower {
 public:
  static std::optional<ModTower> make(const FieldTower& t, std::uint64_t p) {
    ModTower m;
    m.p_ = p;
    m.n_ = t.degree();
    for (const detail::TowerNode* n = t.node(); n; n = n->parent.get()) m.chain_.insert(m.chain_.begin(), n);
    for (const auto* n : m.chain_) {
      std::vector<Elem> mp;
      for (const auto& c : n->minpoly) {
        Elem e;
        for (const auto& q : c) {
          auto r = residue(q, p);
          if (!r) return std::nullopt;
          e.push_back(*r);
        }
        mp.push_back(std::move(e));
      }
      m.minpolys_.push_back(std::move(mp));
    }
    return m;
  }

  using Elem = std::vector<std::uint64_t>;

  static std::optional<std::uint64_t> residue(const BigRational& q, std::uint64_t p) {
    const unsigned long d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (d == 0) return std::nullopt;
    return mpz_fdiv_ui(q.get_num_mpz_t(), p) * inv_mod(d, p) % p;
  }

  std::optional<Elem> reduce(const NFElement& x) const {
    Elem e;
    for (const auto& q : x.coeffs()) {
      auto r = residue(q, p_);
      if (!r) return std::nullopt;
      e.push_back(*r);
    }
    return e;
  }

  std::size_t degree() const { return n_; }
  std::uint64_t prime() const { return p_; }
  bool is_zero(const Elem& a) const {
    for (auto v : a)
      if (v) return false;
    return true;
  }
  Elem one() const {
    Elem e(n_, 0);
    e[0] = 1;
    return e;
  }
  Elem mul(const Elem& a, const Elem& b) const { return mul_level(chain_.size(), a, b); }
  void sub_mul(Elem& acc, const Elem& c, const Elem& b) const {
    const Elem prod = mul(c, b);
    for (std::size_t i = 0; i < n_; ++i) acc[i] = (acc[i] + p_ - prod[i]) % p_;
  }

  // Inverse through the multiplication matrix; nullopt for zero divisors.
  std::optional<Elem> inverse(const Elem& a) const {
    const std::size_t n = n_;
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
      Elem e(n, 0);
      e[i] = 1;
      const Elem col = mul(a, e);
      for (std::size_t r = 0; r < n; ++r) m[r][i] = col[r];
    }
    m[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && m[piv][c] == 0) ++piv;
      if (piv == n) return std::nullopt;
      std::swap(m[piv], m[c]);
      const std::uint64_t inv = inv_mod(m[c][c], p_);
      for (std::size_t j = c; j <= n; ++j) m[c][j] = m[c][j] * inv % p_;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m[r][c] == 0) continue;
        const std::uint64_t f = m[r][c];
        for (std::size_t j = c; j <= n; ++j) m[r][j] = (m[r][j] + p_ - f * m[c][j] % p_) % p_;
      }
    }
    Elem out(n);
    for (std::size_t r = 0; r < n; ++r) out[r] = m[r][n];
    return out;
  }

 private:
  Elem mul_level(std::size_t level, const Elem& a, const Elem& b) const {
    if (level == 0) return {a[0] * b[0] % p_};
    const detail::TowerNode* node = chain_[level - 1];
    const std::size_t d = node->step_degree, m = node->parent_degree;
    std::vector<Elem> prod(2 * d - 1, Elem(m, 0));
    auto chunk = [&](const Elem& x, std::size_t i) { return Elem(x.begin() + i * m, x.begin() + (i + 1) * m); };
    for (std::size_t i = 0; i < d; ++i) {
      const Elem ai = chunk(a, i);
      if (is_zero(ai)) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const Elem bj = chunk(b, j);
        if (is_zero(bj)) continue;
        const Elem pr = mul_level(level - 1, ai, bj);
        for (std::size_t k = 0; k < m; ++k) prod[i + j][k] = (prod[i + j][k] + pr[k]) % p_;
      }
    }
    const auto& mp = minpolys_[level - 1];
    for (std::size_t k = prod.size(); k-- > d;) {
      const Elem c = prod[k];
      if (is_zero(c)) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const Elem t = mul_level(level - 1, c, mp[j]);
        for (std::size_t q = 0; q < m; ++q) prod[k - d + j][q] = (prod[k - d + j][q] + p_ - t[q]) % p_;
      }
    }
    Elem out;
    out.reserve(d * m);
    for (std::size_t i = 0; i < d; ++i) out.insert(out.end(), prod[i].begin(), prod[i].end());
    return out;
  }

  std::uint64_t p_ = 0;
  std::size_t n_ = 1;
  std::vector<const detail::TowerNode*> chain_;
  std::vector<std::vector<Elem>> minpolys_;
};

using MPoly = std::vector<ModTower::Elem>;

// Monic gcd over the reduced tower; nullopt when a zero divisor shows up.
std::optional<MPoly> mod_gcd(const ModTower& R, MPoly a, MPoly b) {
  auto trim_m = [&](MPoly& f) {
    while (!f.empty() && R.is_zero(f.back())) f.pop_back();
  };
  auto monic = [&](MPoly& f) -> bool {
    auto inv = R.inverse(f.back());
    if (!inv) return false;
    for (auto& c : f) c = R.mul(c, *inv);
    return true;
  };
  trim_m(a);
  trim_m(b);
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) {
    if (a.empty() || !monic(a)) return std::nullopt;
    return a;
  }
  if (!monic(b)) return std::nullopt;
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const auto c = a.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) R.sub_mul(a[shift + j], c, b[j]);
      trim_m(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
    if (!b.empty() && !monic(b)) return std::nullopt;
  }
  return a;
}

bool is_prime64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// n/d with |n|, |d| <= sqrt(M/2) and n = d x mod M.
std::optional<BigRational> rational_reconstruction(const BigInt& x, const BigInt& M) {
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), BigInt(M / 2).get_mpz_t());
  BigInt r0 = M, r1 = x, s0 = 0, s1 = 1;
  while (r1 > bound) {
    const BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (abs(s1) > bound || s1 == 0) return std::nullopt;
  BigRational out(r1, s1);
  out.canonicalize();
  return out;
}

}  // namespace

// If g divides a and b over K, a has a unit leading coefficient at the prime
// and both are integral there, then g is integral and its image (of the same
// degree) divides both images.  So a trivial gcd of the images certifies a
// trivial gcd over K.
bool certainly_coprime(const Poly<NFElement>& a, const Poly<NFElement>& b) {
  const std::uint32_t p = a.ctx().modular().p;
  if (p == 0) return false;
  ModPoly ia, ib;
  if (!image(a, ia) || !image(b, ib)) return false;
  const bool a_unit = !ia.empty() && ia.back() != 0;
  const bool b_unit = !ib.empty() && ib.back() != 0;
  if (!a_unit && !b_unit) return false;
  return gcd_degree(std::move(ia), std::move(ib), p) == 0;
}

std::optional<Poly<NFElement>> modular_gcd(const Poly<NFElement>& a, const Poly<NFElement>& b) {
  const FieldTower& t = a.ctx();
  const std::size_t n = t.degree();
  constexpr int kMaxPrimes = 400;
  std::uint64_t p = (1ULL << 31) - 1;
  int degree = -1;
  std::vector<BigInt> acc;  // CRT images of every coordinate of every coefficient
  BigInt modulus = 1;
  std::optional<Poly<NFElement>> previous;
  for (int used = 0; used < kMaxPrimes; p -= 2) {
    if (!is_prime64(p)) continue;
    auto R = ModTower::make(t, p);
    if (!R) continue;
    MPoly ia, ib;
    bool ok = true;
    for (const auto* f : {&a, &b}) {
      MPoly& out = f == &a ? ia : ib;
      for (const auto& c : f->coeffs()) {
        auto e = R->reduce(c);
        if (!e) {
          ok = false;
          break;
        }
        out.push_back(std::move(*e));
      }
    }
    // Leading coefficients must stay units.
    if (!ok || !R->inverse(ia.back()) || !R->inverse(ib.back())) continue;
    auto g = mod_gcd(*R, ia, ib);
    if (!g) continue;
    ++used;
    const int d = static_cast<int>(g->size()) - 1;
    if (d == 0) return Poly<NFElement>::constant(t, a.var(), t.one());
    if (degree != -1 && d > degree) continue;  // unlucky prime
    if (degree == -1 || d < degree) {
      degree = d;
      acc.assign(static_cast<std::size_t>(d + 1) * n, BigInt(0));
      modulus = 1;
      previous.reset();
    }
    // Chinese remaindering into acc.
    const BigInt pz = static_cast<unsigned long>(p);
    BigInt minv;
    mpz_invert(minv.get_mpz_t(), BigInt(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i <= static_cast<std::size_t>(d); ++i)
      for (std::size_t k = 0; k < n; ++k) {
        BigInt& x = acc[i * n + k];
        BigInt diff = (BigInt(static_cast<unsigned long>((*g)[i][k])) - x % pz) % pz;
        if (diff < 0) diff += pz;
        x += modulus * ((diff * minv) % pz);
      }
    modulus *= pz;
    // Reconstruct and test once the image stops changing.
    std::vector<NFElement> coeffs;
    bool rec = true;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(d) && rec; ++i) {
      std::vector<BigRational> c(n);
      for (std::size_t k = 0; k < n && rec; ++k) {
        auto q = rational_reconstruction(acc[i * n + k], modulus);
        if (!q) rec = false;
        else c[k] = *q;
      }
      if (rec) coeffs.emplace_back(t, std::move(c));
    }
    if (!rec) continue;
    Poly<NFElement> cand(t, a.var(), std::move(coeffs));
    if (previous && *previous == cand) {
      if (divrem(a, cand).second.is_zero() && divrem(b, cand).second.is_zero()) return cand;
    }
    previous = std::move(cand);
  }
  return std::nullopt;
}

}  // namespace inose
