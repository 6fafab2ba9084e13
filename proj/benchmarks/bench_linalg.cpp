#include <benchmark/benchmark.h>

#include <random>

#include "derlie/ratmat.hpp"

using namespace derlie;

namespace {

RatMatrix randomMatrix(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rat(num(rng), den(rng));
  return m;
}

}  // namespace

static void BM_Rref(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  RatMatrix m = randomMatrix(n, n, 42);
  for (auto _ : state) {
    RrefResult r = rref(m);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

static void BM_KernelBasis(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  RatMatrix m = randomMatrix(n / 2, n, 7);  // wide: nontrivial kernel
  for (auto _ : state) {
    auto basis = kernelBasis(m);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_KernelBasis)->Arg(8)->Arg(16)->Arg(32);

static void BM_InSpan(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  RatMatrix m = randomMatrix(n, n, 5);
  std::vector<RatVec> span = m.columns();
  RatVec target = m.apply(RatVec(n, rat(1, 3)));
  for (auto _ : state) {
    auto combo = inSpan(span, target);
    benchmark::DoNotOptimize(combo.has_value());
  }
}
BENCHMARK(BM_InSpan)->Arg(8)->Arg(16);
