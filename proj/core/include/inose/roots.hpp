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

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "inose/number_field.hpp"
#include "inose/poly.hpp"

namespace inose {

// Generator values of one complex embedding, bottom step first.
using EmbeddingValues = std::vector<std::complex<double>>;

// Every complex embedding of the tower, located in double precision.
std::vector<EmbeddingValues> all_embeddings(const FieldTower& tower);

std::complex<double> embed_double(const NFElement& x, const EmbeddingValues& gens);

// Roots of a polynomial with complex coefficients (ascending order).
std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs);

// Distinct roots of f lying in the tower of its coefficients.  Candidates
// are located numerically and every returned root is verified exactly, so
// the list is sound; a root with very large coordinates may be missed.
std::vector<NFElement> roots_in_tower(const Poly<NFElement>& f);

// Returns the tower together with a primitive cube root of unity, adjoining
// one (named `name`) only when the tower has none.
std::pair<FieldTower, NFElement> with_cube_root_of_unity(const FieldTower& tower,
                                                         const std::string& name = "w");

// Closest rational with denominator at most max_den, by continued fractions.
BigRational rational_approximation(double x, long max_den);

}  // namespace inose
