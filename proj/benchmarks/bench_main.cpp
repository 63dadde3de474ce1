#include <benchmark/benchmark.h>

#include "fpsel/closed_forms.hpp"
#include "fpsel/fp_integral.hpp"
#include "fpsel/kz.hpp"
#include "fpsel/poch_identity.hpp"
#include "fpsel/prime_field.hpp"

namespace {

void BM_BetaExpansion(benchmark::State& state) {
  fpsel::PrimeField F(13);
  for (auto _ : state)
    benchmark::DoNotOptimize(fpsel::beta_expansion(7, 9, F));
}
BENCHMARK(BM_BetaExpansion);

void BM_SelbergExpansion(benchmark::State& state) {
  fpsel::PrimeField F(13);
  fpsel::SelbergParams S(F, int(state.range(0)), 6, 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fpsel::selberg_S(S));
}
BENCHMARK(BM_SelbergExpansion)->Arg(2)->Arg(3);

void BM_SelbergSumOracle(benchmark::State& state) {
  fpsel::PrimeField F(13);
  fpsel::SelbergParams S(F, int(state.range(0)), 6, 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(fpsel::selberg_sum_oracle(S));
}
BENCHMARK(BM_SelbergSumOracle)->Arg(2)->Arg(3);

void BM_LucasBinomial(benchmark::State& state) {
  fpsel::PrimeField F(13);
  const std::uint64_t n = 123456789123456789ull;
  const std::uint64_t m = 87654321876543ull;
  for (auto _ : state) benchmark::DoNotOptimize(fpsel::binom_lucas(n, m, F));
}
BENCHMARK(BM_LucasBinomial);

void BM_IdentityLhs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fpsel::identity_lhs(int(state.range(0)), 2));
}
BENCHMARK(BM_IdentityLhs)->Arg(2)->Arg(3);

void BM_KzSolution(benchmark::State& state) {
  fpsel::PrimeField F(7);
  fpsel::KZParams K(F, 2, 2, 1, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fpsel::kz_solution(K));
}
BENCHMARK(BM_KzSolution);

void BM_DysonOracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fpsel::dyson_ct_oracle(int(state.range(0)), 2));
}
BENCHMARK(BM_DysonOracle)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
