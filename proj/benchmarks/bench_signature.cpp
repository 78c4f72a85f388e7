#include <benchmark/benchmark.h>

#include <random>

#include "twosig/signature.hpp"

namespace {

using namespace twosig;

template <Semiring T>
EvZeroGrid<T> random_grid(std::size_t n, std::size_t d, int lo, int hi, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vd(lo, hi);
  std::vector<T> data(n * n * d);
  for (auto& v : data) v = from_int<T>(vd(rng));
  return EvZeroGrid<T>(d, n, n, std::move(data));
}

template <Semiring T>
void run_strategy(benchmark::State& state, const char* text, Strategy s) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto z = random_grid<T>(n, 1, -3, 3);
  const auto a = MatrixComposition::parse(text, 1);
  const auto window = full_window(z);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ss_coeff(z, a, window, s, std::numeric_limits<std::uint64_t>::max()));
  }
  state.SetComplexityN(state.range(0));
}

void BM_Naive2x2(benchmark::State& state) { run_strategy<Integer>(state, "[[1,1],[e,1]]", Strategy::Naive); }
void BM_RowDP2x2(benchmark::State& state) { run_strategy<Integer>(state, "[[1,1],[e,1]]", Strategy::RowDP); }
void BM_TwoByTwo(benchmark::State& state) { run_strategy<Integer>(state, "[[1,1],[e,1]]", Strategy::TwoByTwo); }
void BM_Chained2x2(benchmark::State& state) { run_strategy<Integer>(state, "[[1,1],[e,1]]", Strategy::Chained); }
void BM_ChainedDouble(benchmark::State& state) { run_strategy<double>(state, "[[1,1],[e,1]]", Strategy::Chained); }
void BM_ChainedWeight6(benchmark::State& state) {
  run_strategy<Integer>(state, "[[1,2,e],[e,1,e],[e,2,1]]", Strategy::Chained);
}
void BM_TwoByTwoAntiDiagonal(benchmark::State& state) {
  run_strategy<Integer>(state, "[[e,1],[1,e]]", Strategy::TwoByTwo);
}

void BM_BooleanGram(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto z = random_grid<Boolean>(n, 1, 0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ss_bool_allones_2x2(z));
  state.SetComplexityN(state.range(0));
}

void BM_TruncatedSignature(benchmark::State& state) {
  const auto z = random_grid<Integer>(6, 2, -3, 3);
  const auto w = static_cast<unsigned>(state.range(0));
  compositions_up_to_cached(2, w);
  for (auto _ : state) benchmark::DoNotOptimize(ss_truncated(z, w, 1));
}

}  // namespace

BENCHMARK(BM_Naive2x2)->RangeMultiplier(2)->Range(8, 32)->Complexity();
BENCHMARK(BM_RowDP2x2)->RangeMultiplier(2)->Range(8, 64)->Complexity();
BENCHMARK(BM_TwoByTwo)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_Chained2x2)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_ChainedDouble)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_ChainedWeight6)->RangeMultiplier(2)->Range(8, 128)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_TwoByTwoAntiDiagonal)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_BooleanGram)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_TruncatedSignature)->DenseRange(1, 3);
BENCHMARK_MAIN();
