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

#include <gmpxx.h>

#include <string>

namespace inose {

using BigInt = mpz_class;
// mpq_class keeps numerator and denominator coprime with a positive
// denominator after every arithmetic operation.
using BigRational = mpq_class;

// Parses "p", "-p/q" or "p/q" with arbitrary-size integers.
BigRational parse_rational(const std::string& text);

std::string to_string(const BigRational& q);

// n/d in lowest terms; the two-argument mpq_class constructor does not reduce.
inline BigRational ratio(long n, long d) {
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }

}  // namespace inose
