#include <benchmark/benchmark.h>

#include "zpd/builtins.hpp"
#include "zpd/decide.hpp"

namespace {

using namespace zpd;

void BM_RrefRandomQ(benchmark::State& state) {
  const Field f = Field::rationals();
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.set(r, c, Scalar::from_int(f, rng.boxed(5)));
  for (auto _ : state) {
    auto [R, piv] = rref(m);
    benchmark::DoNotOptimize(piv);
  }
}
BENCHMARK(BM_RrefRandomQ)->Arg(8)->Arg(16)->Arg(32);

void BM_ExhaustiveHeisenbergGF5(benchmark::State& state) {
  const Field f = Field::gf(5);
  LieAlgebra L = builtins::heisenberg(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto span = exhaustive_kprime_gfp(L, 100000000);
    benchmark::DoNotOptimize(span.span);
  }
}
BENCHMARK(BM_ExhaustiveHeisenbergGF5)->Arg(1)->Arg(2)->Arg(3);

void BM_DecideZpdGalileiQ(benchmark::State& state) {
  const Field f = Field::rationals();
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  LieAlgebra L = builtins::galilei(f, m);
  auto fams = builtins::families_for_algebra(f, "galilei:" + std::to_string(m));
  SamplerConfig cfg;
  for (auto _ : state) {
    ZpdReport rep = decide_zpd(L, cfg, fams);
    benchmark::DoNotOptimize(rep.verdict);
  }
}
BENCHMARK(BM_DecideZpdGalileiQ)->Arg(1)->Arg(2);

void BM_H2Heisenberg(benchmark::State& state) {
  const Field f = Field::rationals();
  LieAlgebra L = builtins::heisenberg(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    H2Dims dims = h2_dimension(L);
    benchmark::DoNotOptimize(dims);
  }
}
BENCHMARK(BM_H2Heisenberg)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
