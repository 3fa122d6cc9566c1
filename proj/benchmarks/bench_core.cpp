#include <benchmark/benchmark.h>

#include "stablerep/characters.hpp"
#include "stablerep/fourier.hpp"
#include "stablerep/gns.hpp"
#include "stablerep/stability.hpp"
#include "stablerep/stable_states.hpp"
#include "stablerep/thoma.hpp"

using namespace stablerep;

namespace {

const CanonicalStateSpec& spec() {
  static const CanonicalStateSpec s =
      CanonicalStateSpec::make(2, Partition({1, 1}), ThomaParams::make({0.5, 0.3}, {0.1}));
  return s;
}

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(n));
}
BENCHMARK(BM_CharacterTable)->DenseRange(4, 8, 2);

void BM_YoungOrthogonalForm(benchmark::State& state) {
  const Partition lambda({4, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(yor_matrices(lambda));
}
BENCHMARK(BM_YoungOrthogonalForm);

void BM_Fourier(benchmark::State& state) {
  const StateFunction f = StateView::of(spec()).tabulate(static_cast<int>(state.range(0)));
  fourier(f);  // warm the irrep cache
  for (auto _ : state) benchmark::DoNotOptimize(fourier(f));
}
BENCHMARK(BM_Fourier)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_DualNorm(benchmark::State& state) {
  const StateFunction f = StateView::of(spec()).tabulate(static_cast<int>(state.range(0)));
  dual_norm(f);
  for (auto _ : state) benchmark::DoNotOptimize(dual_norm(f));
}
BENCHMARK(BM_DualNorm)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_PositiveDefinite(benchmark::State& state) {
  const StateFunction f = StateView::of(spec()).tabulate(6);
  for (auto _ : state) benchmark::DoNotOptimize(is_positive_definite(f));
}
BENCHMARK(BM_PositiveDefinite)->Unit(benchmark::kMillisecond);

void BM_RecoverParams(benchmark::State& state) {
  const ThomaParams p = ThomaParams::make({0.4, 0.2}, {0.25});
  std::map<int, double> values;
  for (int k = 2; k <= 8; ++k) values[k] = p.cycle_value(k);
  RecoveryOptions opt;
  opt.alpha_bound = 3;
  opt.beta_bound = 3;
  for (auto _ : state) benchmark::DoNotOptimize(recover_params(values, opt));
}
BENCHMARK(BM_RecoverParams)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const StateView view = StateView::of(spec());
  for (auto _ : state) benchmark::DoNotOptimize(classify(view));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_StabilityProfile(benchmark::State& state) {
  const StateFunction f = StateView::of(spec()).tabulate(6);
  for (auto _ : state) benchmark::DoNotOptimize(stability_profile(f, 4, 4));
}
BENCHMARK(BM_StabilityProfile)->Unit(benchmark::kMillisecond);

void BM_CanonicalConstruction(benchmark::State& state) {
  const StateFunction f = StateView::of(spec()).tabulate(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_construction(f));
}
BENCHMARK(BM_CanonicalConstruction)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_InducedMultiplicities(benchmark::State& state) {
  const Partition lambda({2, 1}), mu({2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(induced_multiplicities(lambda, mu));
}
BENCHMARK(BM_InducedMultiplicities)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
