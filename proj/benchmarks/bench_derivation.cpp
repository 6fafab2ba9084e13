#include <benchmark/benchmark.h>

#include "derlie/cstar.hpp"
#include "derlie/dsl.hpp"
#include "derlie/fibration.hpp"

using namespace derlie;

namespace {

const Workspace& bench_ws() {
  static Workspace ws = [] {
    ParseResult r = parseWorkspace(R"(
model SU6 {
  gen x1:4; gen x2:6; gen y1:7; gen y2:9; gen y3:11;
  d y1 = x1^2; d y2 = x1*x2; d y3 = x2^2;
}
relative SU6f : SU6 -> SU6Total { fiber w1:11; fiber w2:23; D w2 = x1*y2*w1 - x2*y1*w1; }
)");
    if (!r.ok()) std::abort();
    return std::move(*r.workspace);
  }();
  return ws;
}

}  // namespace

static void BM_DerComplexBuild(benchmark::State& state) {
  const SullivanModel& m = bench_ws().model("SU6Total");
  for (auto _ : state) {
    DerComplex complex(m);
    benchmark::DoNotOptimize(complex.maxDegree());
  }
}
BENCHMARK(BM_DerComplexBuild);

static void BM_DerHomologyAll(benchmark::State& state) {
  const SullivanModel& m = bench_ws().model("SU6");
  DerComplex complex(m);
  for (auto _ : state) {
    auto slices = complex.allHomology();
    benchmark::DoNotOptimize(slices.size());
  }
}
BENCHMARK(BM_DerHomologyAll);

static void BM_SectionCriterion(benchmark::State& state) {
  const RelativeModel& rm = bench_ws().relative("SU6f");
  for (auto _ : state) {
    FibrationAnalysis fa(rm);
    SectionVerdict v = sectionExists(fa);
    benchmark::DoNotOptimize(v.exists);
  }
}
BENCHMARK(BM_SectionCriterion);

static void BM_TruncateDerDgl(benchmark::State& state) {
  const SullivanModel& m = bench_ws().model("SU6");
  int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TruncatedDgl L = truncateDerDgl(m, cutoff);
    benchmark::DoNotOptimize(L.size());
  }
}
BENCHMARK(BM_TruncateDerDgl)->Arg(7)->Arg(11);
