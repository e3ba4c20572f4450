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

#include <string>
#include <vector>

#include "inose/inose_construct.hpp"
#include "inose/linalg.hpp"
#include "inose/rational.hpp"

namespace inose {

enum class FiberKind { I, II, III, IV, Istar, IVstar, IIIstar, IIstar };

// A singular fiber over a place of degree `degree`; the place stands for
// `degree` geometric fibers of the same type.
struct KodairaFiber {
  Place place;
  int degree = 1;
  FiberKind kind = FiberKind::I;
  int n = 0;  // index of I_n and I_n*
  int v_disc = 0;
  int component_order = 1;

  std::string name() const;
};

// Discriminant valuation and Kodaira type of a locally minimal model with
// valuations (vA, vB, vDisc); residue characteristic 0.  I_0 is reported
// as kind I with n = 0.
KodairaFiber fiber_from_valuations(int vA, int vB, int vDisc);

// All singular fibers of the surface, finite places sorted by degree and
// then by polynomial, infinity last.
std::vector<KodairaFiber> classify_fibers(const SurfaceModel& s);

// "2 II* + 4 I1", counting geometric fibers.
std::string fiber_summary(const std::vector<KodairaFiber>& fibers);

// Sum of degree * v(Delta) over the given fibers.
int discriminant_degree(const std::vector<KodairaFiber>& fibers);

// Which component of a reducible fiber a section meets.  0 is the identity
// component.  I_n gives the index i <= n/2 (up to inversion); IV and IV*
// give 1 or 2, told apart by the tangent branch at the singular point.
struct LocalTerm {
  KodairaFiber fiber;
  int component = 0;
  BigRational contribution;
  BigRational intersection;  // with the zero section, per geometric fiber
};

struct HeightDetail {
  BigRational height;
  int chi = 0;
  BigRational intersection_with_zero;
  BigRational correction;
  std::vector<LocalTerm> terms;  // places with a nonzero term only
};

HeightDetail height_detail(const SurfaceModel& s, const Section& p);
BigRational self_height(const SurfaceModel& s, const Section& p);
BigRational height_pair(const SurfaceModel& s, const Section& p, const Section& q);

struct GramResult {
  Matrix<BigRational> gram;
  BigRational det;
};

GramResult gram_and_det(const SurfaceModel& s, const std::vector<Section>& basis);

// det_F2 == 2^4/3^2 * det_hom.
bool check_lattice_identity(const BigRational& det_F2, const BigRational& det_hom);

// Pairwise coprime squarefree polynomials whose products give every input
// up to constants.  Zero and constant inputs are ignored.
std::vector<UPoly> gcd_free_basis(const std::vector<UPoly>& polys);

}  // namespace inose
