#include <benchmark/benchmark.h>

#include "toporing/constructions.hpp"
#include "toporing/endo_topology.hpp"
#include "toporing/matrix_topology.hpp"
#include "toporing/module.hpp"
#include "toporing/radical.hpp"
#include "toporing/rng.hpp"
#include "toporing/tower.hpp"
#include "toporing/wedderburn.hpp"

using namespace toporing;

static void BM_RadicalUpperTriangular(benchmark::State& state) {
  const StructureAlgebra a = upper_triangular(FiniteField::prime(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(radical(a));
}
BENCHMARK(BM_RadicalUpperTriangular)->Arg(2)->Arg(3)->Arg(4);

static void BM_WedderburnGroupAlgebra(benchmark::State& state) {
  const StructureAlgebra a = cyclic_group_algebra(FiniteField::prime(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wedderburn(a));
}
BENCHMARK(BM_WedderburnGroupAlgebra)->Arg(3)->Arg(5)->Arg(7)->Arg(15);

static void BM_WedderburnMatrixAlgebra(benchmark::State& state) {
  const StructureAlgebra a = matrix_algebra(FiniteField::prime(3), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wedderburn(a));
}
BENCHMARK(BM_WedderburnMatrixAlgebra)->Arg(2)->Arg(3);

static void BM_TowerRadical(benchmark::State& state) {
  const RingTower t = adic_tower(FiniteField::prime(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(topological_jacobson_radical(t));
}
BENCHMARK(BM_TowerRadical)->Arg(4)->Arg(8);

static void BM_WindowedMatMul(benchmark::State& state) {
  const MatrixBase base = tower_base(adic_tower(FiniteField::prime(2), 3));
  const std::size_t w = static_cast<std::size_t>(state.range(0));
  const IndexSet y = IndexSet::finite(w);
  Rng rng(7);
  const WindowedMatrix a = random_windowed(base, y, w, rng, false);
  const WindowedMatrix b = random_windowed(base, y, w, rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(mat_mul(a, b));
}
BENCHMARK(BM_WindowedMatMul)->Arg(4)->Arg(8)->Arg(16);

static void BM_EndoTower(benchmark::State& state) {
  const StructureAlgebra a = truncated_polynomial(FiniteField::prime(2), 3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const std::vector<FiniteModule> parts(n, regular_module(a));
  for (auto _ : state) benchmark::DoNotOptimize(endo_tower(parts, n));
}
BENCHMARK(BM_EndoTower)->Arg(2)->Arg(3);

static void BM_BassFlatSample(benchmark::State& state) {
  const StructureAlgebra a = upper_triangular(FiniteField::prime(2), 3);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(bass_flat_sample(a, seed++));
}
BENCHMARK(BM_BassFlatSample);
BENCHMARK_MAIN();
