#include <benchmark/benchmark.h>

#include <random>

#include "rrb/rrb.hpp"

namespace {

using namespace rrb;

RRBGroup cyclic_identity(int n) {
  return trivial_rrb(cyclic_group(n), cyclic_group(n), identity_map(n));
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-20, 20);
  BigMatrix m(n, std::vector<BigInt>(n));
  for (auto& row : m)
    for (auto& x : row) x = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, n));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateOperators(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FiniteGroup H = cyclic_group(n), G = cyclic_group(n);
  const std::vector<IndexMap> phi(n, identity_map(n));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_rrb_operators(H, G, phi));
}
BENCHMARK(BM_EnumerateOperators)->DenseRange(2, 6);

void BM_TrivialCohomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RRBModule m = trivial_module(cyclic_identity(n), cyclic_identity(2));
  for (auto _ : state) {
    const CochainComplex cx(m);
    benchmark::DoNotOptimize(cx.h2().factors());
  }
}
BENCHMARK(BM_TrivialCohomology)->DenseRange(2, 6);

void BM_BuildExtension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RRBModule m = trivial_module(cyclic_identity(n), cyclic_identity(2));
  const CochainComplex cx(m);
  Vec e(cx.h2().factors().size(), 0);
  if (!e.empty()) e[0] = 1;
  const FactorSystem fs = cx.class_from_coordinates(e).representative;
  for (auto _ : state) benchmark::DoNotOptimize(build_extension(m, fs));
}
BENCHMARK(BM_BuildExtension)->DenseRange(2, 6);

void BM_WellsExactness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Extension ext = direct_product_extension(cyclic_identity(n), cyclic_identity(2));
  for (auto _ : state) {
    const WellsContext ctx(ext);
    benchmark::DoNotOptimize(verify_wells_exactness(ctx));
  }
}
BENCHMARK(BM_WellsExactness)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
