#include <benchmark/benchmark.h>

#include "twosig/algebra.hpp"

namespace {

using namespace twosig;

void BM_QShuffle(benchmark::State& state) {
  const auto& comps = compositions_up_to_cached(2, static_cast<unsigned>(state.range(0)));
  const auto& a = comps.back();
  const auto& b = comps[comps.size() / 2];
  for (auto _ : state) benchmark::DoNotOptimize(qshuffle(a, b));
}

void BM_QShuffleDirect(benchmark::State& state) {
  const auto& comps = compositions_up_to_cached(2, static_cast<unsigned>(state.range(0)));
  const auto& a = comps.back();
  const auto& b = comps[comps.size() / 2];
  for (auto _ : state) benchmark::DoNotOptimize(qshuffle_direct(a, b));
}

void BM_Antipode(benchmark::State& state) {
  const auto w = static_cast<unsigned>(state.range(0));
  std::vector<MatrixComposition> blocks(w, MatrixComposition::parse("1", 1));
  const auto a = diag(blocks, 1);
  for (auto _ : state) benchmark::DoNotOptimize(antipode(a));
}

void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_compositions(2, static_cast<unsigned>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_QShuffle)->DenseRange(1, 3);
BENCHMARK(BM_QShuffleDirect)->DenseRange(1, 3);
BENCHMARK(BM_Antipode)->DenseRange(1, 5);
BENCHMARK(BM_Enumerate)->DenseRange(1, 4);
