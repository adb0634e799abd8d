#include <benchmark/benchmark.h>

#include "aisr/congruence.hpp"
#include "aisr/construct.hpp"
#include "aisr/enumerate.hpp"
#include "aisr/structure.hpp"
#include "aisr/term.hpp"

using namespace aisr;

namespace {

void BM_ValidateAxiomsFlatG3(benchmark::State& state) {
  auto S = flat_extension(heisenberg_group(3));
  for (auto _ : state) benchmark::DoNotOptimize(validate_axioms(S).ok());
}
BENCHMARK(BM_ValidateAxiomsFlatG3);

void BM_IdentitySuiteFlatQ8(benchmark::State& state) {
  auto S = flat_extension(quaternion_group());
  auto battery = builtin_identities(5);
  for (auto _ : state)
    for (const auto& ni : battery)
      benchmark::DoNotOptimize(satisfies(S, ni.identity).holds);
}
BENCHMARK(BM_IdentitySuiteFlatQ8);

void BM_PrincipalCongruenceFlatQ8(benchmark::State& state) {
  auto S = flat_extension(quaternion_group());
  for (auto _ : state)
    benchmark::DoNotOptimize(principal_congruence(S, 0, 8).block_count());
}
BENCHMARK(BM_PrincipalCongruenceFlatQ8);

void BM_CongruenceLatticeFlatG3(benchmark::State& state) {
  auto S = flat_extension(heisenberg_group(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(all_congruences(S).size());
}
BENCHMARK(BM_CongruenceLatticeFlatG3);

void BM_PartitionScanOracleOrder6(benchmark::State& state) {
  auto S = flat_extension(direct_product(cyclic_group(2), cyclic_group(2)));
  for (auto _ : state)
    benchmark::DoNotOptimize(congruences_by_exhaustive_scan(S).size());
}
BENCHMARK(BM_PartitionScanOracleOrder6);

void BM_GreenRelationsFlatG3(benchmark::State& state) {
  auto S = flat_extension(heisenberg_group(3));
  for (auto _ : state)
    benchmark::DoNotOptimize(green_relations(S).d.block_count());
}
BENCHMARK(BM_GreenRelationsFlatG3);

void BM_EnumerateM3Order4(benchmark::State& state) {
  auto V = VarietySpec::mn(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_order(4, V).size());
}
BENCHMARK(BM_EnumerateM3Order4);

void BM_IsomorphismFlatQ8(benchmark::State& state) {
  auto S = flat_extension(quaternion_group());
  // Relabel by a rotation to make the search nontrivial.
  const int k = S.order();
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = (i + 3) % k;
  std::vector<int> add(k * k), mul(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      add[p[a] * k + p[b]] = p[S.add(a, b)];
      mul[p[a] * k + p[b]] = p[S.mul(a, b)];
    }
  FiniteSemiring relabeled(k, add, mul);
  for (auto _ : state)
    benchmark::DoNotOptimize(are_isomorphic(S, relabeled).has_value());
}
BENCHMARK(BM_IsomorphismFlatQ8);

}  // namespace

BENCHMARK_MAIN();
