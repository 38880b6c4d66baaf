#include <random>

#include <benchmark/benchmark.h>

#include "grpkit/constructions.hpp"
#include "grpkit/fp_matrix.hpp"
#include "grpkit/modrep.hpp"
#include "grpkit/structure.hpp"
#include "grpkit/subgroups.hpp"

using namespace grpkit;

namespace {

// Fresh groups each iteration so the cached chain is rebuilt.
void BM_SchreierSimsSymmetric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = symmetric_group(n);
  const std::vector<Permutation> copy(s.generators().begin(), s.generators().end());
  for (auto _ : state) {
    PermGroup g(n, copy);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(8)->Arg(12)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_SchreierSimsWreath(benchmark::State& state) {
  const auto w = wreath_imprimitive(symmetric_group(3), alternating_group(static_cast<std::size_t>(state.range(0))));
  const std::vector<Permutation> copy(w.generators().begin(), w.generators().end());
  for (auto _ : state) {
    PermGroup g(w.degree(), copy);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsWreath)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMicrosecond);

void BM_SubgroupLattice(benchmark::State& state) {
  const PermGroup g = state.range(0) == 0 ? *build_tower(3)[2].group : symmetric_group(5);
  for (auto _ : state) {
    FiniteGroup fg(g);
    benchmark::DoNotOptimize(fg.lattice().subgroups.size());
  }
}
BENCHMARK(BM_SubgroupLattice)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SylowNormalizerAlternating(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto a = alternating_group(p);
  const auto sylow = sylow_subgroup(a, p);
  for (auto _ : state) benchmark::DoNotOptimize(normalizer(a, sylow).order());
}
BENCHMARK(BM_SylowNormalizerAlternating)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FaithfulIrreducibleSearch(benchmark::State& state) {
  const FiniteGroup g3(*build_tower(3)[2].group);
  for (auto _ : state) benchmark::DoNotOptimize(find_faithful_irreducible(g3, 43).dim);
}
BENCHMARK(BM_FaithfulIrreducibleSearch)->Unit(benchmark::kMillisecond);

void BM_MatrixMultiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  FpMatrix a(43, n, n), b(43, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.at(i, j) = static_cast<std::uint32_t>(rng() % 43);
      b.at(i, j) = static_cast<std::uint32_t>(rng() % 43);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatrixMultiply)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

}  // namespace
BENCHMARK_MAIN();
