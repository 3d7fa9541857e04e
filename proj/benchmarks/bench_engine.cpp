// Engine benchmarks: the closed forms at large parameters, chain
// enumeration, the urn identity, and Monte Carlo throughput.

#include "monty/closedform.hpp"
#include "monty/enumeration.hpp"
#include "monty/hypergeom.hpp"
#include "monty/montecarlo.hpp"
#include "monty/scenario.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace monty;

ValidatedGame twelve_door_game() {
  return ValidatedGame::validate(
      {{12, 5}, single_switch_plan(3, 2, 2), OutcomePredicate::at_least(Segment::Posterior, 1)});
}

void BM_SimpleSwitchLargeDoors(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mh2_switch_parts(12345678, 123456789, 1234567));
    benchmark::DoNotOptimize(mh2_improvement_parts(123456789, 111111110));
  }
}
BENCHMARK(BM_SimpleSwitchLargeDoors);

void BM_CompoundCountsTwelveDoor(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mh3_at_least_one_probability({12, 5}, 3, 2, 2));
  }
}
BENCHMARK(BM_CompoundCountsTwelveDoor);

void BM_RepeatedSwitchMillionDoors(benchmark::State& state) {
  const std::vector<long long> schedule{999996, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mh4_switch_parts(1, 1000000, schedule));
    benchmark::DoNotOptimize(mh4_door_posteriors(1, 1000000, schedule));
  }
}
BENCHMARK(BM_RepeatedSwitchMillionDoors);

void BM_EnumerateTwelveDoor(benchmark::State& state) {
  const auto game = twelve_door_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(outcome_probability(game));
  }
}
BENCHMARK(BM_EnumerateTwelveDoor);

void BM_EnumerateWide(benchmark::State& state) {
  // 2^12 patterns with mixed phases.
  const auto game = ValidatedGame::validate({{30, 12},
                                             {Phase::pick(6), Phase::open(4), Phase::pick(6)},
                                             OutcomePredicate::at_least(Segment::Posterior, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(outcome_probability(game));
  }
}
BENCHMARK(BM_EnumerateWide);

void BM_UrnIdentity(benchmark::State& state) {
  const UrnSample urn{30, 13, 11};
  for (auto _ : state) {
    benchmark::DoNotOptimize(chu_vandermonde_check(urn));
  }
}
BENCHMARK(BM_UrnIdentity);

void BM_HypergeomRoute(benchmark::State& state) {
  const auto pred = OutcomePredicate::at_least(Segment::Posterior, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mh3_via_hypergeom({12, 5}, 3, 2, 2, pred));
  }
}
BENCHMARK(BM_HypergeomRoute);

void BM_TrialStreamU64(benchmark::State& state) {
  TrialStream stream(1, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream.next_u64());
  }
}
BENCHMARK(BM_TrialStreamU64);

void BM_SimulateClassic(benchmark::State& state) {
  const auto game = ValidatedGame::validate(
      {{3, 1}, single_switch_plan(1, 1, 1), OutcomePredicate::at_least(Segment::Posterior, 1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(game, 100000, 1, 1));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SimulateClassic);

void BM_SimulateTwelveDoor(benchmark::State& state) {
  const auto game = twelve_door_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(game, 100000, 1, 1));
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SimulateTwelveDoor);

}  // namespace

BENCHMARK_MAIN();
