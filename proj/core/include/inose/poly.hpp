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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "inose/errors.hpp"
#include "inose/number_field.hpp"
#include "inose/rational.hpp"

namespace inose {

// Coefficient rings plug into Poly<R> through RingTraits<R>.  A context
// carries whatever is needed to build 0 and 1 (the tower, a variable name).
template <class R>
struct RingTraits;

template <>
struct RingTraits<BigRational> {
  using Ctx = std::monostate;
  static BigRational zero(const Ctx&) { return 0; }
  static BigRational one(const Ctx&) { return 1; }
  static BigRational from_int(const Ctx&, long n) { return n; }
  static Ctx ctx(const BigRational&) { return {}; }
  static bool is_zero(const BigRational& x) { return sgn(x) == 0; }
  static BigRational inverse(const BigRational& x) {
    if (sgn(x) == 0) fail(ErrorCode::DivisionByZero, "division by zero rational");
    return 1 / x;
  }
  static std::string str(const BigRational& x) { return x.get_str(); }
  static bool is_simple(const BigRational& x) { return sgn(x) >= 0; }
};

template <>
struct RingTraits<NFElement> {
  using Ctx = FieldTower;
  static NFElement zero(const Ctx& t) { return t.zero(); }
  static NFElement one(const Ctx& t) { return t.one(); }
  static NFElement from_int(const Ctx& t, long n) { return t.from_int(n); }
  static Ctx ctx(const NFElement& x) { return x.tower(); }
  static bool is_zero(const NFElement& x) { return x.is_zero(); }
  static NFElement inverse(const NFElement& x) { return x.inverse(); }
  static std::string str(const NFElement& x) { return x.to_string(); }
  // A single nonnegative rational needs no parentheses when printed.
  static bool is_simple(const NFElement& x) {
    return x.is_rational() && sgn(x.rational_part()) >= 0;
  }
};

// Dense univariate polynomial with coefficients in R, lowest degree first.
// The zero polynomial has no coefficients; otherwise the last one is nonzero.
template <class R>
class Poly {
 public:
  using Traits = RingTraits<R>;
  using CoeffCtx = typename Traits::Ctx;

  Poly(CoeffCtx ctx, std::string var) : ctx_(std::move(ctx)), var_(std::move(var)) {}
  Poly(CoeffCtx ctx, std::string var, std::vector<R> coeffs)
      : ctx_(std::move(ctx)), var_(std::move(var)), c_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(const CoeffCtx& ctx, const std::string& var, R c) {
    return Poly(ctx, var, std::vector<R>{std::move(c)});
  }
  static Poly monomial(const CoeffCtx& ctx, const std::string& var, R c, std::size_t e) {
    std::vector<R> v(e + 1, Traits::zero(ctx));
    v[e] = std::move(c);
    return Poly(ctx, var, std::move(v));
  }
  static Poly variable(const CoeffCtx& ctx, const std::string& var) {
    return monomial(ctx, var, Traits::one(ctx), 1);
  }

  const CoeffCtx& ctx() const { return ctx_; }
  const std::string& var() const { return var_; }
  const std::vector<R>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const R& lead() const { return c_.back(); }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Traits::zero(ctx_); }

  R zero_coeff() const { return Traits::zero(ctx_); }
  R one_coeff() const { return Traits::one(ctx_); }
  Poly zero() const { return Poly(ctx_, var_); }
  Poly one() const { return constant(ctx_, var_, one_coeff()); }
  Poly constant(R c) const { return constant(ctx_, var_, std::move(c)); }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!Traits::is_zero(o.c_[i])) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      if (!Traits::is_zero(o.c_[i])) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.zero();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, Traits::zero(a.ctx_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (Traits::is_zero(b.c_[j])) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(a.ctx_, a.var_, std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const R& s) const {
    if (Traits::is_zero(s)) return zero();
    Poly r = *this;
    for (auto& c : r.c_)
      if (!Traits::is_zero(c)) c = c * s;
    r.normalize();
    return r;
  }

  // Multiplies by var^n.
  Poly shifted(std::size_t n) const {
    if (is_zero()) return *this;
    std::vector<R> v(n, Traits::zero(ctx_));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(ctx_, var_, std::move(v));
  }

  Poly pow(unsigned long e) const {
    Poly result = one(), base = *this;
    while (e) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<R> v;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      R c = c_[i];
      c = c * from_int(static_cast<long>(i));
      v.push_back(std::move(c));
    }
    return Poly(ctx_, var_, std::move(v));
  }

  R eval(const R& x) const {
    R acc = Traits::zero(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  // Horner evaluation in an R-algebra S: `embed` maps coefficients into S.
  template <class S, class Embed>
  S eval_in(const S& x, const S& zero_s, Embed&& embed) const {
    S acc = zero_s;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + embed(c_[i]);
    return acc;
  }

  // f(g) for g with the same coefficient ring.
  Poly compose(const Poly& g) const {
    Poly acc = g.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + g.constant(c_[i]);
    return acc;
  }

  Poly with_var(std::string v) const {
    Poly r = *this;
    r.var_ = std::move(v);
    return r;
  }

  R from_int(long n) const { return Traits::from_int(ctx_, n); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (Traits::is_zero(c_[i])) continue;
      std::string cs = Traits::str(c_[i]);
      const bool simple = Traits::is_simple(c_[i]);
      std::string term;
      const bool is_one = cs == "1";
      if (i == 0) {
        term = simple ? cs : "(" + cs + ")";
      } else {
        std::string mono = var_ + (i > 1 ? "^" + std::to_string(i) : "");
        term = is_one ? mono : (simple ? cs : "(" + cs + ")") + "*" + mono;
      }
      if (!out.empty()) out += " + ";
      out += term;
    }
    return out;
  }

 private:
  void normalize() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  CoeffCtx ctx_;
  std::string var_;
  std::vector<R> c_;
};

template <class R>
struct PolyCtx {
  typename RingTraits<R>::Ctx coeff;
  std::string var;
};

template <class R>
struct RingTraits<Poly<R>> {
  using Ctx = PolyCtx<R>;
  static Poly<R> zero(const Ctx& c) { return Poly<R>(c.coeff, c.var); }
  static Poly<R> one(const Ctx& c) { return Poly<R>::constant(c.coeff, c.var, RingTraits<R>::one(c.coeff)); }
  static Poly<R> from_int(const Ctx& c, long n) {
    return Poly<R>::constant(c.coeff, c.var, RingTraits<R>::from_int(c.coeff, n));
  }
  static Ctx ctx(const Poly<R>& p) { return {p.ctx(), p.var()}; }
  static bool is_zero(const Poly<R>& p) { return p.is_zero(); }
  static std::string str(const Poly<R>& p) { return p.to_string(); }
  static bool is_simple(const Poly<R>& p) {
    return p.degree() <= 0 && (p.is_zero() || RingTraits<R>::is_simple(p.lead()));
  }
};

// ------------------------------------------------ operations over a field

template <class F>
F field_inverse(const F& x) {
  return RingTraits<F>::inverse(x);
}

template <class F>
Poly<F> make_monic(const Poly<F>& f) {
  if (f.is_zero()) return f;
  return f.scaled(field_inverse(f.lead()));
}

// Quotient and remainder; DivisionByZero when g = 0.
template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& f, const Poly<F>& g) {
  if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (f.degree() < g.degree()) return {f.zero(), f};
  std::vector<F> r = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const F lead_inv = field_inverse(g.lead());
  const bool monic = g.lead() == f.one_coeff();
  std::vector<F> q(r.size() - dg, f.zero_coeff());
  for (std::size_t k = r.size(); k-- > dg;) {
    if (RingTraits<F>::is_zero(r[k])) continue;
    F c = monic ? r[k] : r[k] * lead_inv;
    const std::size_t shift = k - dg;
    for (std::size_t j = 0; j < dg; ++j)
      if (!RingTraits<F>::is_zero(gc[j])) r[shift + j] -= c * gc[j];
    r[k] = f.zero_coeff();
    q[shift] = std::move(c);
  }
  r.resize(dg, f.zero_coeff());
  return {Poly<F>(f.ctx(), f.var(), std::move(q)), Poly<F>(f.ctx(), f.var(), std::move(r))};
}

template <class F>
Poly<F> rem(const Poly<F>& f, const Poly<F>& g) {
  return divrem(f, g).second;
}

// Division that must be exact; `what` names the caller for the error.
template <class F>
Poly<F> exact_div(const Poly<F>& f, const Poly<F>& g, const char* what = "exact_div") {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) fail(ErrorCode::IndeterminateForm, std::string(what) + ": division not exact");
  return q;
}

// Remainder of f by a polynomial with leading coefficient 1; works over any
// commutative ring.
template <class R>
Poly<R> rem_monic(const Poly<R>& f, const Poly<R>& g) {
  if (g.is_zero() || !(g.lead() == g.one_coeff()))
    fail(ErrorCode::NotMonic, "rem_monic needs a monic divisor");
  if (f.degree() < g.degree()) return f;
  std::vector<R> r = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  for (std::size_t k = r.size(); k-- > dg;) {
    if (RingTraits<R>::is_zero(r[k])) continue;
    const R c = r[k];
    const std::size_t shift = k - dg;
    for (std::size_t j = 0; j < dg; ++j)
      if (!RingTraits<R>::is_zero(gc[j])) r[shift + j] -= c * gc[j];
    r[k] = f.zero_coeff();
  }
  r.resize(dg, f.zero_coeff());
  return Poly<R>(f.ctx(), f.var(), std::move(r));
}

// True only if a and b are certainly coprime, judged from their images
// modulo the tower's prime; false means "unknown".
bool certainly_coprime(const Poly<NFElement>& a, const Poly<NFElement>& b);
// Monic gcd by reduction modulo primes, Chinese remaindering and rational
// reconstruction, verified by exact division; nullopt if it gives up.
std::optional<Poly<NFElement>> modular_gcd(const Poly<NFElement>& a, const Poly<NFElement>& b);

// Monic greatest common divisor (zero only when both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if constexpr (std::is_same_v<F, NFElement>) {
    if (b.degree() > 0 && certainly_coprime(a, b)) return b.one();
    if (b.degree() > 2) {
      if (auto g = modular_gcd(a, b)) return *g;
    }
  }
  while (!b.is_zero()) {
    if (b.degree() == 0) return b.one();
    Poly<F> r = rem(a, b);
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

// Returns (g, s, t) with s*a + t*b = g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b, s0 = a.one(), s1 = a.zero(), t0 = a.zero(), t1 = a.one();
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const F li = field_inverse(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

template <class F>
F resultant(Poly<F> f, Poly<F> g) {
  if (f.is_zero() || g.is_zero()) return f.zero_coeff();
  F result = f.one_coeff();
  while (g.degree() > 0) {
    Poly<F> r = rem(f, g);
    if (r.is_zero()) return f.zero_coeff();
    const int m = f.degree(), n = g.degree();
    F lc = g.lead();
    for (int k = 0; k < m - r.degree(); ++k) result = result * lc;
    if ((m * n) % 2 == 1) result = -result;
    f = std::move(g);
    g = std::move(r);
  }
  F lc = g.lead();
  for (int k = 0; k < f.degree(); ++k) result = result * lc;
  return result;
}

// Yun's algorithm: f = c * prod g_i^i with g_i monic, square-free and
// pairwise coprime.  Returns the nonconstant (g_i, i).
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (f.degree() <= 0) return out;
  Poly<F> fm = make_monic(f);
  Poly<F> d = fm.derivative();
  Poly<F> a = gcd(fm, d);
  Poly<F> b = exact_div(fm, a);
  Poly<F> c = exact_div(d, a);
  Poly<F> e = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly<F> g = gcd(b, e);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_div(b, g);
    c = exact_div(e, g);
    e = c - b.derivative();
    ++i;
  }
  return out;
}

// Multiplicity of the (nonconstant) polynomial p in f != 0.
template <class F>
int multiplicity(Poly<F> f, const Poly<F>& p) {
  int k = 0;
  while (true) {
    auto [q, r] = divrem(f, p);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

}  // namespace inose
