#pragma once

#include "monty/scenario.hpp"

#include <array>
#include <cstdint>

namespace monty {

// Counter-based randomness (Philox4x32-10). Draw j of trial i under seed s
// is a pure function of (s, i, j): every trial owns an independent stream,
// so results depend only on (seed, trials) — never on worker count,
// scheduling, or which trials run where.
class TrialStream {
public:
  TrialStream(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next_u64();

  // Uniform on [0, n), n >= 1; unbiased via multiply-shift with rejection.
  std::uint64_t uniform(std::uint64_t n);

private:
  void refill();

  std::uint32_t key0_;
  std::uint32_t key1_;
  std::uint32_t trial_lo_;
  std::uint32_t trial_hi_;
  std::uint32_t block_ = 0;
  std::array<std::uint32_t, 4> lanes_{};
  int available_ = 0;
};

struct SimulationEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/trials) on the observed p
};

// Plays the game `trials` times: lay out the cars uniformly, walk the plan
// with a uniformly picking player and a host who opens uniformly among the
// unheld goats, and score the game's predicate. workers == 0 picks the
// hardware default; any worker count gives bit-identical results.
SimulationEstimate simulate(const ValidatedGame& game, std::uint64_t trials,
                            std::uint64_t seed, unsigned workers = 0);

// Both policies on common randomness: each trial's layout and opening picks
// are shared, the stay arm keeps them and scores the predicate on the
// opening picks, the switch arm plays the plan to the end and scores the
// game's own predicate. Variance of the difference shrinks; the counts stay
// exact integers.
struct PolicyComparison {
  SimulationEstimate stay;
  SimulationEstimate switched;
};
PolicyComparison simulate_policy_comparison(const ValidatedGame& game, std::uint64_t trials,
                                            std::uint64_t seed, unsigned workers = 0);

}  // namespace monty
