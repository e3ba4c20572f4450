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


#include <benchmark/benchmark.h>

#include <random>

#include "inose/mw_lattice.hpp"
#include "inose/named_examples.hpp"
#include "inose/section_solver.hpp"

namespace {

using namespace inose;

// Q(r2)(i)(rho), rho^2 = r2 - 1.
FieldTower degree8_tower() {
  const FieldTower h =
      FieldTower().extend("r2", std::vector<BigRational>{-2, 0, 1}).extend("i", std::vector<BigRational>{1, 0, 1});
  return h.extend("rho", {h.generator("r2") - h.from_int(1), h.zero(), h.one()});
}

NFElement random_element(const FieldTower& k, std::mt19937_64& rng) {
  std::vector<BigRational> c;
  for (std::size_t i = 0; i < k.degree(); ++i)
    c.push_back(ratio(static_cast<long>(rng() % 199) - 99, static_cast<long>(rng() % 20) + 1));
  return NFElement(k, std::move(c));
}

UPoly random_poly(const FieldTower& k, int degree, std::mt19937_64& rng) {
  std::vector<NFElement> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_element(k, rng));
  return UPoly(k, "x", std::move(c));
}

ThreeIsogenyFamily family(long a, long b) {
  const FieldTower q;
  return build_family(q.from_int(a), q.from_int(b));
}

void BM_TowerMultiply(benchmark::State& state) {
  const FieldTower k = degree8_tower();
  std::mt19937_64 rng(1);
  const NFElement x = random_element(k, rng), y = random_element(k, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_TowerMultiply);

void BM_TowerInverse(benchmark::State& state) {
  const FieldTower k = degree8_tower();
  std::mt19937_64 rng(2);
  const NFElement x = random_element(k, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_TowerInverse);

// Polynomials with a common factor of degree 2 over the degree-8 tower.
void BM_PolyGcd(benchmark::State& state) {
  const FieldTower k = degree8_tower();
  std::mt19937_64 rng(3);
  const int d = static_cast<int>(state.range(0));
  const UPoly g = random_poly(k, 2, rng);
  const UPoly a = g * random_poly(k, d, rng), b = g * random_poly(k, d - 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SectionF1(benchmark::State& state) {
  const auto fam = family(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(section_F1(fam));
}
BENCHMARK(BM_SectionF1)->Unit(benchmark::kMillisecond);

void BM_SectionF2(benchmark::State& state) {
  const auto fam = family(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(section_F2(fam));
}
BENCHMARK(BM_SectionF2)->Unit(benchmark::kMillisecond);

void BM_ClassifyFibers(benchmark::State& state) {
  const SurfaceModel s = build_surface(invariants_from_family(family(2, -1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify_fibers(s));
}
BENCHMARK(BM_ClassifyFibers)->Unit(benchmark::kMillisecond);

void BM_HeightP1(benchmark::State& state) {
  const auto p1 = section_F1(family(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(self_height(p1.surface, p1.point));
}
BENCHMARK(BM_HeightP1)->Unit(benchmark::kMillisecond);

void BM_FamilyPipeline(benchmark::State& state) {
  const FieldTower q;
  for (auto _ : state) benchmark::DoNotOptimize(run_family(q.from_int(1), q.from_int(1)));
}
BENCHMARK(BM_FamilyPipeline)->Unit(benchmark::kMillisecond);

void BM_NamedX333(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_x333());
}
BENCHMARK(BM_NamedX333)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
