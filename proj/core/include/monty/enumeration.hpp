#pragma once

#include "monty/rational.hpp"
#include "monty/scenario.hpp"

#include <nlohmann/json_fwd.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monty {

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One fully resolved pick pattern with its exact weight and the per-pick
// availability factors that produce it. A pattern is impossible exactly when
// some numerator factor is <= 0; its probability is then exactly 0.
struct WeightedSequence {
  std::string sequence;              // picks in plan order, 'c'/'g', '|' at each opening round
  std::vector<int> picks;            // 1 = car, 0 = goat, one entry per pick slot
  std::vector<BigInt> numerator;     // availability factor per pick
  std::vector<BigInt> denominator;   // doors in play per pick
  Rational probability;
};

inline constexpr long long kDefaultEnumerationBound = 24;

// Visits all 2^total_picks patterns in binary-counter order: car = 0,
// goat = 1, the first pick is the most significant digit. Throws
// BoundExceeded when total picks exceed `bound`.
void enumerate_visit(const ValidatedGame& game,
                     const std::function<void(const WeightedSequence&)>& visit,
                     long long bound = kDefaultEnumerationBound);

std::vector<WeightedSequence> enumerate_sequences(const ValidatedGame& game,
                                                  long long bound = kDefaultEnumerationBound);

// Does this pick pattern satisfy `pred` for this game's segment geometry?
bool sequence_satisfies(const ValidatedGame& game, const std::vector<int>& picks,
                        const OutcomePredicate& pred);

// Exact probability of the game's predicate: the sum of the weights of the
// satisfying patterns.
Rational outcome_probability(const ValidatedGame& game,
                             long long bound = kDefaultEnumerationBound);

// Sum of every pattern's weight (always exactly 1 for a validated game).
Rational normalization_sum(const ValidatedGame& game,
                           long long bound = kDefaultEnumerationBound);

struct MarginalCheck {
  Rational truncated;  // segment-local route: prefix marginalized, future dropped
  Rational full;       // filter-and-sum over full-length patterns
  bool equal() const { return truncated == full; }
};

// Evaluates the game's predicate, retargeted onto `segment`, along two
// routes. The truncated route enumerates only the phases the segment spans:
// picks before it collapse into car-count groups (weighted by compound
// counting when the prefix is the opening pick phase, by prefix chains
// otherwise), and picks after it are never expanded — continuations of a
// prefix always total 1. Agreement with the full route is the
// marginalization property the engine leans on.
MarginalCheck marginal_check(const ValidatedGame& game, Segment segment,
                             long long bound = kDefaultEnumerationBound);

// {"sequence": "ccg|cg", "numerator": ["5","4","7","3","4"],
//  "denominator": ["12","11","10","7","6"], "probability": "num/den"}
nlohmann::json row_to_json(const WeightedSequence& row);

}  // namespace monty
