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


// Shared fixtures for the unit tests: a few towers and seeded random
// elements.  Seeds are fixed so failures reproduce.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "inose/number_field.hpp"
#include "inose/ratfunc.hpp"

namespace inose::testing {

inline FieldTower q_sqrt2() { return FieldTower().extend("r2", std::vector<BigRational>{-2, 0, 1}); }

// Q(w)(c), w^2 + w + 1 = 0, c^3 = 2.
inline FieldTower q_w_c() {
  const FieldTower k = FieldTower().extend("w", std::vector<BigRational>{1, 1, 1});
  return k.extend("c", std::vector<BigRational>{-2, 0, 0, 1});
}

// Q(r2)(i)(rho), rho^2 = 1 - r2: a relative quadratic step over a quartic.
inline FieldTower q_r2_i_rho() {
  const FieldTower h = q_sqrt2().extend("i", std::vector<BigRational>{1, 0, 1});
  return h.extend("rho", {h.generator("r2") - h.from_int(1), h.zero(), h.one()});
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long small(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  BigRational rational(long bound = 9) {
    long den = small(1, bound);
    return ratio(small(-bound, bound), den);
  }

  NFElement element(const FieldTower& k, long bound = 9) {
    std::vector<BigRational> c;
    for (std::size_t i = 0; i < k.degree(); ++i) c.push_back(rational(bound));
    return NFElement(k, std::move(c));
  }

  NFElement nonzero(const FieldTower& k, long bound = 9) {
    for (;;) {
      NFElement x = element(k, bound);
      if (!x.is_zero()) return x;
    }
  }

  UPoly poly(const FieldTower& k, const std::string& var, int degree, long bound = 9) {
    std::vector<NFElement> c;
    for (int i = 0; i < degree; ++i) c.push_back(element(k, bound));
    c.push_back(nonzero(k, bound));
    return UPoly(k, var, std::move(c));
  }

  RatFunc ratfunc(const FieldTower& k, const std::string& var, int num_deg, int den_deg) {
    return RatFunc(poly(k, var, num_deg, 5), poly(k, var, den_deg, 5));
  }

 private:
  std::mt19937_64 gen_;
};

inline std::vector<std::pair<long, long>> acceptance_pairs() {
  return {{1, 1}, {2, -1}, {3, 2}, {6, -1}, {-1, 2}};
}

}  // namespace inose::testing
