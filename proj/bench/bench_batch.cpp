// Serial reference drivers against their OpenMP twins on the propositional
// corpus (sequents over at most 3 letters with at most 3 connectives).

#include <benchmark/benchmark.h>

#include "folderol/batch.hpp"

namespace {

using namespace folderol;

const std::vector<Sequent>& corpus() {
  static const std::vector<Sequent> problems = enumerate_propositional(3, 3);
  return problems;
}

const std::vector<ProofTree>& proofs() {
  static const std::vector<ProofTree> trees = [] {
    std::vector<ProofTree> out;
    for (auto& t : prove_bounded_serial(corpus(), 0))
      if (t) out.push_back(std::move(*t));
    return out;
  }();
  return trees;
}

void BM_run_folderol_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_folderol_serial(corpus(), 10000));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus().size()));
}

void BM_run_folderol_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_folderol_parallel(corpus(), 10000));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus().size()));
}

void BM_prove_bounded_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prove_bounded_serial(corpus(), 0));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus().size()));
}

void BM_prove_bounded_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(prove_bounded_parallel(corpus(), 0));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(corpus().size()));
}

void BM_check_all_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_all_serial(proofs()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(proofs().size()));
}

void BM_check_all_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_all_parallel(proofs()));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(proofs().size()));
}

}  // namespace

BENCHMARK(BM_run_folderol_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_run_folderol_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_prove_bounded_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_prove_bounded_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_check_all_serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_check_all_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
