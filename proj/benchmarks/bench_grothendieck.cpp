#include "groth/determinant.hpp"
#include "groth/identities.hpp"
#include "groth/operators.hpp"
#include "groth/permutation.hpp"
#include "groth/tableaux.hpp"

#include <benchmark/benchmark.h>

using namespace groth;

namespace {

// Staircase-like shapes of growing size: (1), (2,1), (3,2,1), (3,3,2), (4,3,2).
Partition shape(int k) {
  static const std::vector<Partition> shapes = {{1}, {2, 1}, {3, 2, 1}, {3, 3, 2}, {4, 3, 2}};
  return shapes[k];
}

void BM_Bialternant(benchmark::State& st) {
  const Partition lam = shape(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(bialternant_G(lam, 3, lam.size() + 3));
}
BENCHMARK(BM_Bialternant)->DenseRange(0, 4);

void BM_HookValuedTableaux(benchmark::State& st) {
  const Partition lam = shape(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enum_G_tableaux(lam, GFamily::HookValued, 3, lam.size() + 2));
}
BENCHMARK(BM_HookValuedTableaux)->DenseRange(0, 3);

void BM_JacobiTrudiG(benchmark::State& st) {
  const Partition lam = shape(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(jacobi_trudi_G(lam, 3, lam.size() + 3, JTForm::H));
}
BENCHMARK(BM_JacobiTrudiG)->DenseRange(0, 4);

void BM_JacobiTrudiDual(benchmark::State& st) {
  const Partition lam = shape(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(jacobi_trudi_g(lam));
}
BENCHMARK(BM_JacobiTrudiDual)->DenseRange(0, 4);

void BM_RimBorderTableaux(benchmark::State& st) {
  const Partition lam = shape(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enum_g_rbt(lam, 3));
}
BENCHMARK(BM_RimBorderTableaux)->DenseRange(0, 3);

void BM_SchurExpandDual(benchmark::State& st) {
  const Partition lam = shape(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(schur_expand_g(lam));
}
BENCHMARK(BM_SchurExpandDual)->DenseRange(0, 4);

void BM_SchurExpandOperators(benchmark::State& st) {
  const Partition lam = shape(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(schur_expand_G(lam, lam.size() + 3));
}
BENCHMARK(BM_SchurExpandOperators)->DenseRange(0, 3);

void BM_PathSystems(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enum_path_systems({3, 3, 3}, {2, 2, 1}, Grid::Type1));
}
BENCHMARK(BM_PathSystems);

void BM_OperatorRelations(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(verify_relations(n, n));
}
BENCHMARK(BM_OperatorRelations)->DenseRange(3, 5);

void BM_StableLimit(benchmark::State& st) {
  const Permutation w({2, 4, 1, 3});
  const int d = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(stable_G_w(w, 4, d));
}
BENCHMARK(BM_StableLimit)->DenseRange(4, 6);

void BM_CanonicalRecursion(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(canonical_recursion(k));
}
BENCHMARK(BM_CanonicalRecursion)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
