#include <benchmark/benchmark.h>

#include "hldecomp/decomposition.hpp"
#include "hldecomp/exact_rank.hpp"
#include "hldecomp/functional_oracle.hpp"
#include "hldecomp/polytope_count.hpp"
#include "hldecomp/weyl_characters.hpp"

using namespace hldecomp;

namespace {

const DrinfeldWord& worked_word() {
  static const DrinfeldWord word(8, {{2, 0}, {3, 3}, {4, 0}, {5, 3}, {7, -1}});
  return word;
}

const RootLatticeElement worked_gamma{1, 3, 4, 4, 3, 2, 1, 0};

void BM_Multiplicity(benchmark::State& state) {
  MultiplicityOptions opt;
  opt.strategy = static_cast<CountStrategy>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(worked_word(), worked_gamma, opt));
}
BENCHMARK(BM_Multiplicity)
    ->Arg(static_cast<int>(CountStrategy::DepthFirst))
    ->Arg(static_cast<int>(CountStrategy::GradeSliced))
    ->Unit(benchmark::kMillisecond);

void BM_MultiplicityUnpruned(benchmark::State& state) {
  MultiplicityOptions opt;
  opt.pruning = Pruning::None;
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity(worked_word(), worked_gamma, opt));
}
BENCHMARK(BM_MultiplicityUnpruned)->Unit(benchmark::kMillisecond);

void BM_GradedDecomposition(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(graded_decomposition(worked_word()));
}
BENCHMARK(BM_GradedDecomposition)->Unit(benchmark::kMillisecond);

// Evaluation module with xi = 1: the largest grid member dominates the cost.
void BM_OracleEvaluation(benchmark::State& state) {
  const auto v = static_cast<std::int64_t>(state.range(0));
  const auto in = OracleInput::from_xi(constant_xi(3, 1), Weight{v, v, v});
  for (auto _ : state) benchmark::DoNotOptimize(oracle_decomposition(in));
}
BENCHMARK(BM_OracleEvaluation)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_OracleConstraints(benchmark::State& state) {
  const auto in = OracleInput::from_xi(constant_xi(3, 1), Weight{2, 2, 2});
  const RootLatticeElement gamma{3, 4, 3};
  for (auto _ : state) benchmark::DoNotOptimize(build_constraints(in, gamma, state.range(0)));
}
BENCHMARK(BM_OracleConstraints)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_RankModP(benchmark::State& state) {
  const auto in = OracleInput::from_xi(constant_xi(3, 1), Weight{2, 2, 2});
  const auto cm = build_constraints(in, RootLatticeElement{3, 4, 3}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(cm.matrix));
  state.counters["cols"] = static_cast<double>(cm.matrix.cols());
  state.counters["rows"] = static_cast<double>(cm.matrix.rows());
}
BENCHMARK(BM_RankModP)->Arg(5)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExactRank(benchmark::State& state) {
  const auto in = OracleInput::from_xi(constant_xi(2, 2), Weight{7, 5});
  const auto cm = build_constraints(in, RootLatticeElement{2, 1}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(cm.matrix));
}
BENCHMARK(BM_ExactRank);

void BM_WeightMultiplicities(benchmark::State& state) {
  const auto v = static_cast<std::int64_t>(state.range(0));
  const Weight mu{v, v, v, v};
  for (auto _ : state) benchmark::DoNotOptimize(weight_multiplicities(mu));
}
BENCHMARK(BM_WeightMultiplicities)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_TensorPower(benchmark::State& state) {
  const Weight w1{1, 0, 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(tensor_power_decompose(w1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TensorPower)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
