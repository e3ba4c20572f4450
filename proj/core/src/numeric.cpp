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

#include "inose/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace inose {

namespace {

Real abs_of(const Real& x, mpfr_rnd_t rnd = MPFR_RNDU) {
  Real r(x.prec());
  mpfr_abs(r.get(), x.get(), rnd);
  return r;
}

Real add_up(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul_up(const Real& a, const Real& b) {
  Real r(std::max(a.prec(), b.prec()));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

// 2^(-prec + 3): a generous bound on the relative error of one complex
// operation carried out in round-to-nearest.
Real unit_error(mpfr_prec_t prec) {
  Real e(prec);
  mpfr_set_ui_2exp(e.get(), 1, -static_cast<mpfr_exp_t>(prec) + 3, MPFR_RNDU);
  return e;
}

}  // namespace

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(prec) {}

ComplexBall ComplexBall::from_rational(const BigRational& q, mpfr_prec_t prec) {
  ComplexBall b(prec);
  mpfr_set_q(b.re_.get(), q.get_mpq_t(), MPFR_RNDN);
  b.add_rounding(abs_of(b.re_));
  return b;
}

ComplexBall ComplexBall::from_complex(std::complex<double> z, mpfr_prec_t prec) {
  ComplexBall b(prec);
  mpfr_set_d(b.re_.get(), z.real(), MPFR_RNDN);
  mpfr_set_d(b.im_.get(), z.imag(), MPFR_RNDN);
  return b;
}

Real ComplexBall::abs_upper() const {
  return add_up(add_up(abs_of(re_), abs_of(im_)), rad_);
}

Real ComplexBall::abs_lower() const {
  Real m(prec());
  mpfr_hypot(m.get(), re_.get(), im_.get(), MPFR_RNDD);
  Real r(prec());
  mpfr_sub(r.get(), m.get(), rad_.get(), MPFR_RNDD);
  return r;
}

void ComplexBall::add_rounding(const Real& magnitude) {
  rad_ = add_up(rad_, mul_up(magnitude, unit_error(prec())));
}

void ComplexBall::widen(const Real& r) { rad_ = add_up(rad_, r); }

ComplexBall ComplexBall::center() const {
  ComplexBall c = *this;
  mpfr_set_zero(c.rad_.get(), 1);
  return c;
}

bool ComplexBall::contains(std::complex<double> z) const {
  Real dr(prec()), di(prec()), d(prec());
  mpfr_sub_d(dr.get(), re_.get(), z.real(), MPFR_RNDN);
  mpfr_sub_d(di.get(), im_.get(), z.imag(), MPFR_RNDN);
  mpfr_hypot(d.get(), dr.get(), di.get(), MPFR_RNDD);
  // Allow for the rounding of the double itself.
  return mpfr_cmp_d(d.get(), rad_.to_double() + 1e-300 + 4e-16 * std::abs(z)) <= 0;
}

bool ComplexBall::overlaps(const ComplexBall& o) const {
  Real dr(prec()), di(prec()), d(prec());
  mpfr_sub(dr.get(), re_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_sub(di.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_hypot(d.get(), dr.get(), di.get(), MPFR_RNDD);
  Real slack = add_up(rad_, o.rad_);
  return mpfr_cmp(d.get(), slack.get()) <= 0;
}

bool ComplexBall::encloses(const ComplexBall& o) const {
  Real dr(prec()), di(prec()), d(prec());
  mpfr_sub(dr.get(), re_.get(), o.re_.get(), MPFR_RNDU);
  mpfr_sub(di.get(), im_.get(), o.im_.get(), MPFR_RNDU);
  mpfr_hypot(d.get(), dr.get(), di.get(), MPFR_RNDU);
  return mpfr_cmp(add_up(d, o.rad_).get(), rad_.get()) <= 0;
}

ComplexBall ComplexBall::operator+(const ComplexBall& o) const {
  ComplexBall r(prec());
  mpfr_add(r.re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_add(r.im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  r.rad_ = add_up(rad_, o.rad_);
  r.add_rounding(add_up(abs_of(r.re_), abs_of(r.im_)));
  return r;
}

ComplexBall ComplexBall::operator-() const {
  ComplexBall r = *this;
  mpfr_neg(r.re_.get(), re_.get(), MPFR_RNDN);
  mpfr_neg(r.im_.get(), im_.get(), MPFR_RNDN);
  return r;
}

ComplexBall ComplexBall::operator-(const ComplexBall& o) const { return *this + (-o); }

ComplexBall ComplexBall::operator*(const ComplexBall& o) const {
  ComplexBall r(prec());
  Real t1(prec()), t2(prec());
  mpfr_mul(t1.get(), re_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), im_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_sub(r.re_.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), re_.get(), o.im_.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), im_.get(), o.re_.get(), MPFR_RNDN);
  mpfr_add(r.im_.get(), t1.get(), t2.get(), MPFR_RNDN);
  // |a||rb| + |b||ra| + ra*rb, with |.| bounded by |re| + |im|.
  Real ma = add_up(abs_of(re_), abs_of(im_));
  Real mb = add_up(abs_of(o.re_), abs_of(o.im_));
  r.rad_ = add_up(add_up(mul_up(ma, o.rad_), mul_up(mb, rad_)), mul_up(rad_, o.rad_));
  r.add_rounding(mul_up(ma, mb));
  return r;
}

ComplexBall ComplexBall::operator/(const ComplexBall& o) const {
  Real lower = o.abs_lower();
  if (mpfr_sgn(lower.get()) <= 0)
    fail(ErrorCode::PrecisionExhausted, "divisor ball contains zero");
  // 1/o: midpoint conj(m)/|m|^2, radius rad/(|m|(|m|-rad)).
  ComplexBall inv(prec());
  Real n2(prec()), mabs(prec());
  mpfr_sqr(n2.get(), o.re_.get(), MPFR_RNDN);
  Real t(prec());
  mpfr_sqr(t.get(), o.im_.get(), MPFR_RNDN);
  mpfr_add(n2.get(), n2.get(), t.get(), MPFR_RNDN);
  mpfr_div(inv.re_.get(), o.re_.get(), n2.get(), MPFR_RNDN);
  mpfr_div(inv.im_.get(), o.im_.get(), n2.get(), MPFR_RNDN);
  mpfr_neg(inv.im_.get(), inv.im_.get(), MPFR_RNDN);
  mpfr_hypot(mabs.get(), o.re_.get(), o.im_.get(), MPFR_RNDD);
  Real denom(prec());
  mpfr_mul(denom.get(), mabs.get(), lower.get(), MPFR_RNDD);
  mpfr_div(inv.rad_.get(), o.rad_.get(), denom.get(), MPFR_RNDU);
  Real inv_mag(prec());
  mpfr_ui_div(inv_mag.get(), 1, lower.get(), MPFR_RNDU);
  inv.add_rounding(inv_mag);
  return *this * inv;
}

std::string ComplexBall::to_string(int digits) const {
  std::ostringstream os;
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, re_.get());
  os << "(" << buf;
  mpfr_snprintf(buf, sizeof buf, "%+.*Rg", digits, im_.get());
  os << " " << buf << "i) +/- ";
  mpfr_snprintf(buf, sizeof buf, "%.3Rg", rad_.get());
  os << buf;
  return os.str();
}

namespace {

ComplexBall eval_chunk(std::span<const BigRational> chunk, std::size_t steps,
                       const FieldTower& tower, const std::vector<ComplexBall>& gens,
                       mpfr_prec_t prec) {
  if (steps == 0) return ComplexBall::from_rational(chunk[0], prec);
  const std::size_t d = tower.step_degree(steps - 1);
  const std::size_t m = chunk.size() / d;
  ComplexBall acc(prec);
  for (std::size_t j = d; j-- > 0;) {
    acc = acc * gens[steps - 1];
    acc = acc + eval_chunk(chunk.subspan(j * m, m), steps - 1, tower, gens, prec);
  }
  return acc;
}

ComplexBall eval_poly(const std::vector<ComplexBall>& coeffs, const ComplexBall& z) {
  ComplexBall acc(z.prec());
  for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * z + coeffs[j];
  return acc;
}

}  // namespace

std::vector<ComplexBall> embed_generators(const FieldTower& tower, const Embedding& choice,
                                          long precision_bits) {
  if (precision_bits < 16)
    fail(ErrorCode::PrecisionExhausted, "precision below 16 bits");
  if (choice.approx.size() != tower.num_steps())
    fail(ErrorCode::PrecisionExhausted, "embedding needs one approximation per generator");
  const mpfr_prec_t prec = precision_bits;
  std::vector<ComplexBall> gens;
  for (std::size_t k = 0; k < tower.num_steps(); ++k) {
    const auto mp = tower.minpoly(k);
    std::vector<ComplexBall> coeffs, dcoeffs;
    for (const auto& c : mp) coeffs.push_back(eval_chunk(c.coeffs(), k, tower, gens, prec));
    for (std::size_t j = 1; j < coeffs.size(); ++j)
      dcoeffs.push_back(coeffs[j] * ComplexBall::from_rational(BigRational(static_cast<long>(j)), prec));
    ComplexBall z = ComplexBall::from_complex(choice.approx[k], prec);
    const int iterations = 8 + static_cast<int>(std::log2(static_cast<double>(precision_bits)));
    for (int it = 0; it < iterations; ++it) {
      ComplexBall f = eval_poly(coeffs, z).center();
      ComplexBall fp = eval_poly(dcoeffs, z).center();
      if (mpfr_sgn(fp.abs_lower().get()) <= 0) break;
      z = (z - f / fp).center();
    }
    // A degree-n polynomial has a root within n|f(z)/f'(z)| of z.
    ComplexBall f = eval_poly(coeffs, z);
    ComplexBall fp = eval_poly(dcoeffs, z);
    Real lower = fp.abs_lower();
    if (mpfr_sgn(lower.get()) <= 0)
      fail(ErrorCode::PrecisionExhausted,
           "cannot isolate a root of the minimal polynomial of '" + tower.generator_name(k) + "'");
    Real bound(prec);
    mpfr_div(bound.get(), f.abs_upper().get(), lower.get(), MPFR_RNDU);
    mpfr_mul_ui(bound.get(), bound.get(), static_cast<unsigned long>(mp.size() - 1), MPFR_RNDU);
    z.widen(bound);
    gens.push_back(z);
  }
  return gens;
}

ComplexBall numeric_embed(const NFElement& x, const Embedding& choice, long precision_bits) {
  const auto gens = embed_generators(x.tower(), choice, precision_bits);
  return eval_chunk(x.coeffs(), x.tower().num_steps(), x.tower(), gens, precision_bits);
}

}  // namespace inose
