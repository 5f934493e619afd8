#include <benchmark/benchmark.h>

#include <random>

#include "reeb/oracle.hpp"
#include "reeb/planner.hpp"
#include "reeb/snf.hpp"

using namespace reeb;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-9, 9);
  std::vector<Integer> entries(n * n);
  for (auto& e : entries) e = entry(rng);
  return IntMatrix(n, n, std::move(entries));
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

// Ranks 4j: strictly increasing, so peeling always succeeds.
void BM_PlanPeel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<long> ranks(static_cast<std::size_t>(n) + 1, 0);
  for (int j = 1; j <= n; ++j) ranks[static_cast<std::size_t>(j)] = 4L * j;
  const TargetSequence t(GradedGroup::from_ranks(std::span<const long>(ranks)));
  for (auto _ : state) benchmark::DoNotOptimize(plan_peel(t));
}
BENCHMARK(BM_PlanPeel)->Arg(4)->Arg(16)->Arg(64);

void BM_OracleSearch(benchmark::State& state) {
  const auto t = TargetSequence::from_ranks({0, 2, 2, 2});
  const SearchBounds bounds{3, 4, 6};
  for (auto _ : state) benchmark::DoNotOptimize(search_realization(t, bounds));
}
BENCHMARK(BM_OracleSearch);

}  // namespace
BENCHMARK_MAIN();
