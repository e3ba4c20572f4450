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

#include <mpfr.h>

#include <complex>
#include <string>
#include <vector>

#include "inose/number_field.hpp"

namespace inose {

// Owning wrapper around mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  Real& operator=(Real o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Rectangular-midpoint complex ball: the set {z : |z - mid| <= rad}.
// Every operation widens the radius enough to cover rounding, so a ball
// computed from enclosures of the inputs encloses the exact result.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 64);
  static ComplexBall from_rational(const BigRational& q, mpfr_prec_t prec);
  static ComplexBall from_complex(std::complex<double> z, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return re_.prec(); }
  std::complex<double> mid() const { return {re_.to_double(), im_.to_double()}; }
  double radius() const { return rad_.to_double(); }

  // Upper bound on |z| over the ball.
  Real abs_upper() const;
  // Lower bound on |z| over the ball (may be <= 0).
  Real abs_lower() const;

  bool contains(std::complex<double> z) const;
  bool overlaps(const ComplexBall& o) const;
  // True when `o` lies inside this ball.
  bool encloses(const ComplexBall& o) const;

  ComplexBall operator+(const ComplexBall& o) const;
  ComplexBall operator-(const ComplexBall& o) const;
  ComplexBall operator*(const ComplexBall& o) const;
  ComplexBall operator/(const ComplexBall& o) const;
  ComplexBall operator-() const;

  // Adds `r` to the radius (rounded up).
  void widen(const Real& r);
  // Midpoint-only view with zero radius, used by Newton refinement.
  ComplexBall center() const;

  std::string to_string(int digits = 20) const;

 private:
  void add_rounding(const Real& magnitude);

  Real re_, im_, rad_;
};

// Chooses, for each generator of a tower, the complex root of its minimal
// polynomial nearest to the given approximation.
struct Embedding {
  std::vector<std::complex<double>> approx;
};

// Encloses the image of x under the chosen embedding.  Throws
// PrecisionExhausted when a generator cannot be isolated at this precision.
ComplexBall numeric_embed(const NFElement& x, const Embedding& choice, long precision_bits);

// Certified enclosures of the generators themselves.
std::vector<ComplexBall> embed_generators(const FieldTower& tower, const Embedding& choice,
                                          long precision_bits);

}  // namespace inose
