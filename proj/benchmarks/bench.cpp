#include <benchmark/benchmark.h>

#include "taylor/absorption.hpp"
#include "taylor/catalog.hpp"
#include "taylor/closure.hpp"
#include "taylor/csp.hpp"
#include "taylor/edges.hpp"
#include "taylor/free_algebra.hpp"
#include "taylor/verify.hpp"

namespace {

using namespace taylor;

void BM_FreeAlgebraA1(benchmark::State& state) {
  const auto A = a1();
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(free_algebra(A, k).size());
}
BENCHMARK(BM_FreeAlgebraA1)->Arg(2)->Arg(3);

void BM_ComputeEdges(benchmark::State& state) {
  const auto algs = builtin_catalog();
  const auto& alg = algs[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(alg.name());
  for (auto _ : state) benchmark::DoNotOptimize(compute_edges(alg));
}
BENCHMARK(BM_ComputeEdges)->DenseRange(0, 3);

void BM_ComputeEdgesZ2Squared(benchmark::State& state) {
  const auto sq = power(z2_minority(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(compute_edges(sq));
}
BENCHMARK(BM_ComputeEdgesZ2Squared);

void BM_AbsorptionReportA1(benchmark::State& state) {
  const auto A = a1();
  for (auto _ : state) benchmark::DoNotOptimize(absorption_report(A).subsets.size());
}
BENCHMARK(BM_AbsorptionReportA1);

void BM_VerifyCatalog(benchmark::State& state) {
  const auto tmpl = Template::hs_closure(builtin_catalog());
  std::vector<FiniteAlgebra> algs;
  for (const auto& m : tmpl.members()) algs.push_back(m.algebra);
  const auto catalog = with_edges(algs);
  for (auto _ : state) benchmark::DoNotOptimize(verify_edge_axioms(catalog).all_pass());
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

void BM_KlMinimizeChain(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Instance p;
  for (std::size_t v = 0; v < n; ++v) p.add_variable("v" + std::to_string(v), a1());
  for (std::size_t v = 0; v + 1 < n; ++v) p.add_constraint({v, v + 1}, {{0, 0}, {1, 2}, {2, 3}, {3, 1}, {0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(kl_minimize(p, 2, 3).rounds);
}
BENCHMARK(BM_KlMinimizeChain)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
