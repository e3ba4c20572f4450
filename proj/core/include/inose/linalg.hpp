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
#include <vector>

#include "inose/errors.hpp"
#include "inose/poly.hpp"

namespace inose {

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  using T = RingTraits<F>;
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && T::is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const F inv = T::inverse(m[r][c]);
    for (std::size_t j = c; j < cols; ++j)
      if (!T::is_zero(m[r][j])) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || T::is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!T::is_zero(m[r][j])) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of {v : m v = 0}, one vector per free column with a 1 there.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, const typename RingTraits<F>::Ctx& ctx,
                                      std::size_t cols) {
  using T = RingTraits<F>;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, T::zero(ctx));
    v[free] = T::one(ctx);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
F determinant(Matrix<F> m) {
  using T = RingTraits<F>;
  if (m.empty()) fail(ErrorCode::DegenerateSystem, "determinant of an empty matrix");
  const std::size_t n = m.size();
  const auto ctx = T::ctx(m[0][0]);
  F det = T::one(ctx);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && T::is_zero(m[p][c])) ++p;
    if (p == n) return T::zero(ctx);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    const F inv = T::inverse(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (T::is_zero(m[i][c])) continue;
      const F f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace inose
