#include <benchmark/benchmark.h>

#include "schurkit/characters.hpp"
#include "schurkit/lr.hpp"
#include "schurkit/plethysm.hpp"
#include "schurkit/resolutions.hpp"
#include "schurkit/tca.hpp"

namespace {

using namespace schurkit;

void BM_LrCoefficientCold(benchmark::State& state) {
  Partition nu({10, 6, 4, 2}), lambda({6, 2}), mu({8, 4, 2});
  for (auto _ : state) {
    clear_lr_cache();
    benchmark::DoNotOptimize(lr_coefficient(nu, lambda, mu));
  }
}
BENCHMARK(BM_LrCoefficientCold);

void BM_LrCoefficientWarm(benchmark::State& state) {
  Partition nu({10, 6, 4, 2}), lambda({6, 2}), mu({8, 4, 2});
  lr_coefficient(nu, lambda, mu);
  for (auto _ : state) benchmark::DoNotOptimize(lr_coefficient(nu, lambda, mu));
}
BENCHMARK(BM_LrCoefficientWarm);

void BM_TensorExpand(benchmark::State& state) {
  Partition lambda({3, 2, 1}), mu({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(tensor_expand_generic(lambda, mu));
}
BENCHMARK(BM_TensorExpand);

void BM_CharacterTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    clear_character_cache();
    benchmark::DoNotOptimize(character_table(n));
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(10)->Arg(12);

void BM_Kronecker(benchmark::State& state) {
  Partition lambda({4, 2, 1}), mu({3, 3, 1}), nu({3, 2, 2});
  for (auto _ : state)
    benchmark::DoNotOptimize(kronecker(lambda, mu, nu));
}
BENCHMARK(BM_Kronecker);

void BM_SymOfSym2(benchmark::State& state) {
  int depth = static_cast<int>(state.range(0));
  PolynomialTcaSpec spec{simple(Partition({2}))};
  for (auto _ : state)
    benchmark::DoNotOptimize(tca_decompose(spec, depth));
}
BENCHMARK(BM_SymOfSym2)->Arg(8)->Arg(12);

void BM_KoszulExactness(benchmark::State& state) {
  int rank = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GradedComplex complex = koszul_complex(rank, 6);
    benchmark::DoNotOptimize(exactness_report(complex));
  }
}
BENCHMARK(BM_KoszulExactness)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
