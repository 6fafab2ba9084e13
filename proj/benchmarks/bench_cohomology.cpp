#include <benchmark/benchmark.h>

#include "derlie/cohomology.hpp"
#include "derlie/dsl.hpp"

using namespace derlie;

namespace {

const SullivanModel& fiveGenBase() {
  static Workspace ws = [] {
    ParseResult r = parseWorkspace(R"(
model B {
  gen v1:2; gen v2:2; gen v3:5; gen v4:5; gen v5:5;
  d v3 = v1^3; d v4 = v1^2*v2; d v5 = v2^3;
}
)");
    if (!r.ok()) std::abort();
    return std::move(*r.workspace);
  }();
  return ws.model("B");
}

}  // namespace

static void BM_CdgaCohomology(benchmark::State& state) {
  int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CohomologyTable t = cdgaCohomology(fiveGenBase(), cutoff);
    benchmark::DoNotOptimize(t.dims.size());
  }
}
BENCHMARK(BM_CdgaCohomology)->Arg(8)->Arg(12)->Arg(16);

static void BM_BorelExtension(benchmark::State& state) {
  static Workspace ws = [] {
    ParseResult r = parseWorkspace("model S3 { gen v:3; } borel rot : S3 rank 1 { D v = t1^2; }");
    if (!r.ok()) std::abort();
    return std::move(*r.workspace);
  }();
  const BorelDecl& decl = ws.borel("rot");
  int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BorelResult b = borelExtend(ws.model("S3"), decl.rank, decl.images, cutoff);
    benchmark::DoNotOptimize(b.tailVanishes);
  }
}
BENCHMARK(BM_BorelExtension)->Arg(12)->Arg(20);

static void BM_HalperinTest(benchmark::State& state) {
  static Workspace ws = [] {
    ParseResult r = parseWorkspace("model CP3 { gen x:2; gen y:7; d y = x^4; }");
    if (!r.ok()) std::abort();
    return std::move(*r.workspace);
  }();
  for (auto _ : state) {
    HalperinVerdict v = halperinTest(ws.model("CP3"));
    benchmark::DoNotOptimize(v.holds);
  }
}
BENCHMARK(BM_HalperinTest);
