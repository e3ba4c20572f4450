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

#include <optional>
#include <string>

#include "inose/number_field.hpp"
#include "inose/poly.hpp"

namespace inose {

using UPoly = Poly<NFElement>;

// Element of K(var) for a tower K, kept as num/den with den monic and
// gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc(FieldTower tower, std::string var);  // zero
  explicit RatFunc(UPoly num);
  RatFunc(UPoly num, UPoly den);

  static RatFunc constant(const FieldTower& tower, const std::string& var, const NFElement& c);
  static RatFunc constant(const FieldTower& tower, const std::string& var, long c) {
    return constant(tower, var, tower.from_int(c));
  }
  static RatFunc variable(const FieldTower& tower, const std::string& var);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  const FieldTower& tower() const { return num_.ctx(); }
  const std::string& var() const { return num_.var(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  // Requires is_constant().
  NFElement constant_value() const;

  RatFunc inverse() const;
  RatFunc pow(long e) const;

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend RatFunc operator*(const RatFunc& a, const NFElement& c);
  friend RatFunc operator*(const NFElement& c, const RatFunc& a) { return a * c; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Value at a point of K; DivisionByZero at a pole.
  NFElement eval(const NFElement& x) const;
  RatFunc lift_to(const FieldTower& target) const;
  RatFunc project_to(const FieldTower& base) const;
  RatFunc map_coeffs(const FieldAutomorphism& sigma) const;
  RatFunc with_var(const std::string& v) const;

  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(UPoly num, UPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc from_reduced(UPoly num, UPoly den);

  UPoly num_, den_;
};

struct RatFuncCtx {
  FieldTower tower;
  std::string var;
};

template <>
struct RingTraits<RatFunc> {
  using Ctx = RatFuncCtx;
  static RatFunc zero(const Ctx& c) { return RatFunc(c.tower, c.var); }
  static RatFunc one(const Ctx& c) { return RatFunc::constant(c.tower, c.var, 1); }
  static RatFunc from_int(const Ctx& c, long n) { return RatFunc::constant(c.tower, c.var, n); }
  static Ctx ctx(const RatFunc& f) { return {f.tower(), f.var()}; }
  static bool is_zero(const RatFunc& f) { return f.is_zero(); }
  static RatFunc inverse(const RatFunc& f) { return f.inverse(); }
  static std::string str(const RatFunc& f) { return f.to_string(); }
  static bool is_simple(const RatFunc& f) {
    return f.is_constant() && RingTraits<NFElement>::is_simple(f.constant_value());
  }
};

UPoly lift_poly(const UPoly& f, const FieldTower& target);
UPoly map_poly(const UPoly& f, const FieldAutomorphism& sigma);

// A place of K(var): a monic polynomial assumed irreducible (finite) or the
// place at infinity.
struct Place {
  enum class Kind { Finite, Infinity };
  Kind kind = Kind::Infinity;
  std::optional<UPoly> poly;

  static Place infinity() { return Place{}; }
  static Place finite(const UPoly& p) { return Place{Kind::Finite, make_monic(p)}; }
  bool is_infinity() const { return kind == Kind::Infinity; }
  std::string to_string() const;
};

// Order of vanishing of f at v; ZeroFunction for f = 0.
int valuation(const RatFunc& f, const Place& v);

// f(image), in image's variable and tower.  IndeterminateForm when the
// composed denominator vanishes identically.
RatFunc substitute(const RatFunc& f, const RatFunc& image);

// Returns R in `newvar` with R(var^m) = f.  When `zeta` (a primitive m-th
// root of unity of the tower of f) is supplied, invariance under
// var -> zeta*var is checked by substitution; either way the identity
// R(var^m) = f is verified before returning.  NotInSubfield on failure.
RatFunc rewrite_in_power(const RatFunc& f, int m, const std::string& newvar,
                         const std::optional<NFElement>& zeta = std::nullopt);

}  // namespace inose
