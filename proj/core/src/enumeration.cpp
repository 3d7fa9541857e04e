#include "monty/enumeration.hpp"

#include "monty/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <map>

namespace monty {

namespace {

struct ChainState {
  long long cars = 0;
  long long goats = 0;
  long long doors = 0;
};

// Walks `phases` for one resolved pick pattern, recording the availability
// factor of every pick. Openings consume goats and doors without a factor.
void walk_chain(const PhasePlan& phases, const std::vector<int>& picks, ChainState st,
                std::vector<BigInt>& num, std::vector<BigInt>& den) {
  std::size_t slot = 0;
  for (const Phase& ph : phases) {
    if (ph.kind == PhaseKind::Open) {
      st.goats -= ph.count;
      st.doors -= ph.count;
      continue;
    }
    for (long long i = 0; i < ph.count; ++i, ++slot) {
      const bool car = picks[slot] != 0;
      num.emplace_back(car ? st.cars : st.goats);
      den.emplace_back(st.doors);
      (car ? st.cars : st.goats) -= 1;
      st.doors -= 1;
    }
  }
}

// Product/product, forced to exactly 0 as soon as any availability factor
// is exhausted (factors can run negative past an impossible branch; the
// first offender is always a zero, so <= 0 and == 0 detect the same rows).
Rational weight_from_traces(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
  BigInt n = 1;
  for (const BigInt& f : num) {
    if (f <= 0) return Rational(0);
    n *= f;
  }
  BigInt d = 1;
  for (const BigInt& f : den) d *= f;
  return Rational(n, d);
}

std::vector<int> pattern_from_mask(unsigned long long mask, long long picks) {
  std::vector<int> out(static_cast<std::size_t>(picks));
  for (long long i = 0; i < picks; ++i) {
    const unsigned long long bit = (mask >> (picks - 1 - i)) & 1ULL;
    out[static_cast<std::size_t>(i)] = bit == 0 ? 1 : 0;  // counter digit 0 = car
  }
  return out;
}

std::string render_sequence(const PhasePlan& phases, const std::vector<int>& picks) {
  std::string out;
  std::size_t slot = 0;
  for (const Phase& ph : phases) {
    if (ph.kind == PhaseKind::Open) {
      out += '|';
      continue;
    }
    for (long long i = 0; i < ph.count; ++i, ++slot) out += picks[slot] ? 'c' : 'g';
  }
  return out;
}

long long count_picks(const PhasePlan& phases) {
  long long picks = 0;
  for (const Phase& ph : phases) {
    if (ph.kind == PhaseKind::Pick) picks += ph.count;
  }
  return picks;
}

void check_bound(long long picks, long long bound) {
  if (picks > bound || picks > 62) {
    throw BoundExceeded("enumeration: 2^" + std::to_string(picks) +
                        " patterns exceed the bound of 2^" +
                        std::to_string(std::min<long long>(bound, 62)));
  }
}

// Sum over the patterns of `phases` (from `st`) that satisfy `accept`.
// `accept` sees the pattern's pick values in phase order.
Rational sum_over_patterns(const PhasePlan& phases, ChainState st,
                           const std::function<bool(const std::vector<int>&)>& accept) {
  const long long picks = count_picks(phases);
  Rational total(0);
  std::vector<BigInt> num, den;
  for (unsigned long long mask = 0; mask < (1ULL << picks); ++mask) {
    const std::vector<int> pattern = pattern_from_mask(mask, picks);
    if (!accept(pattern)) continue;
    num.clear();
    den.clear();
    walk_chain(phases, pattern, st, num, den);
    total += weight_from_traces(num, den);
  }
  return total;
}

}  // namespace

void enumerate_visit(const ValidatedGame& game,
                     const std::function<void(const WeightedSequence&)>& visit,
                     long long bound) {
  const long long picks = game.total_picks();
  check_bound(picks, bound);
  const ChainState start{game.scenario().cars, game.scenario().goats(), game.scenario().doors};
  WeightedSequence row;
  for (unsigned long long mask = 0; mask < (1ULL << picks); ++mask) {
    row.picks = pattern_from_mask(mask, picks);
    row.sequence = render_sequence(game.plan(), row.picks);
    row.numerator.clear();
    row.denominator.clear();
    walk_chain(game.plan(), row.picks, start, row.numerator, row.denominator);
    row.probability = weight_from_traces(row.numerator, row.denominator);
    visit(row);
  }
}

std::vector<WeightedSequence> enumerate_sequences(const ValidatedGame& game, long long bound) {
  std::vector<WeightedSequence> rows;
  rows.reserve(1ULL << std::min<long long>(game.total_picks(), 20));
  enumerate_visit(game, [&rows](const WeightedSequence& row) { rows.push_back(row); }, bound);
  return rows;
}

bool sequence_satisfies(const ValidatedGame& game, const std::vector<int>& picks,
                        const OutcomePredicate& pred) {
  const auto [lo, hi] = game.segment_range(pred.segment);
  if (pred.kind == PredicateKind::PositionIsCar) {
    return picks[static_cast<std::size_t>(lo + pred.k - 1)] != 0;
  }
  long long cars = 0;
  for (long long i = lo; i < hi; ++i) cars += picks[static_cast<std::size_t>(i)];
  switch (pred.kind) {
    case PredicateKind::AtLeast: return cars >= pred.k;
    case PredicateKind::Exactly: return cars == pred.k;
    case PredicateKind::AllCars: return cars == hi - lo;
    case PredicateKind::PositionIsCar: break;
  }
  return false;
}

Rational outcome_probability(const ValidatedGame& game, long long bound) {
  check_bound(game.total_picks(), bound);
  const ChainState start{game.scenario().cars, game.scenario().goats(), game.scenario().doors};
  return sum_over_patterns(game.plan(), start, [&](const std::vector<int>& picks) {
    return sequence_satisfies(game, picks, game.predicate());
  });
}

Rational normalization_sum(const ValidatedGame& game, long long bound) {
  check_bound(game.total_picks(), bound);
  const ChainState start{game.scenario().cars, game.scenario().goats(), game.scenario().doors};
  return sum_over_patterns(game.plan(), start, [](const std::vector<int>&) { return true; });
}

MarginalCheck marginal_check(const ValidatedGame& game, Segment segment, long long bound) {
  const OutcomePredicate retargeted{segment, game.predicate().kind, game.predicate().k};
  const ValidatedGame refocused = game.with_predicate(retargeted);
  const auto [lo, hi] = refocused.segment_range(segment);

  // Split the plan: `prefix` holds the phases whose picks all land before
  // the segment; opening rounds wedged between prefix and segment belong to
  // the suffix chain (they shift availability for the segment's picks).
  const PhasePlan& plan = refocused.plan();
  std::size_t seg_phase = 0;
  long long picks_before = 0;
  while (picks_before < lo || plan[seg_phase].kind == PhaseKind::Open) {
    if (plan[seg_phase].kind == PhaseKind::Pick) picks_before += plan[seg_phase].count;
    ++seg_phase;
  }
  std::size_t suffix_begin = seg_phase;
  while (suffix_begin > 0 && plan[suffix_begin - 1].kind == PhaseKind::Open) --suffix_begin;

  std::size_t suffix_end = suffix_begin;  // one past the phase holding slot hi-1
  long long picks_seen = lo;
  for (std::size_t i = suffix_begin; i < plan.size() && picks_seen < hi; ++i) {
    if (plan[i].kind == PhaseKind::Pick) picks_seen += plan[i].count;
    suffix_end = i + 1;
  }

  const PhasePlan prefix(plan.begin(), plan.begin() + static_cast<std::ptrdiff_t>(suffix_begin));
  const PhasePlan suffix(plan.begin() + static_cast<std::ptrdiff_t>(suffix_begin),
                         plan.begin() + static_cast<std::ptrdiff_t>(suffix_end));

  const long long prefix_picks = count_picks(prefix);
  long long prefix_opens = 0;
  for (const Phase& ph : prefix) {
    if (ph.kind == PhaseKind::Open) prefix_opens += ph.count;
  }
  check_bound(prefix_picks, bound);
  check_bound(hi - lo, bound);

  const Scenario& sc = refocused.scenario();

  // Group the prefix by how many cars it caught. A one-phase prefix gets the
  // compound-counting weights directly; anything longer is grouped by its
  // own chains.
  std::map<long long, Rational> groups;
  if (prefix_picks == 0) {
    groups[0] = Rational(1);
  } else if (prefix.size() == 1) {
    const BigInt all = falling_factorial(sc.doors, prefix_picks);
    for (long long x = 0; x <= prefix_picks; ++x) {
      const BigInt ways = binomial(prefix_picks, x) * falling_factorial(sc.cars, x) *
                          falling_factorial(sc.goats(), prefix_picks - x);
      if (ways > 0) groups[x] = Rational(ways, all);
    }
  } else {
    const ChainState start{sc.cars, sc.goats(), sc.doors};
    std::vector<BigInt> num, den;
    for (unsigned long long mask = 0; mask < (1ULL << prefix_picks); ++mask) {
      const std::vector<int> pattern = pattern_from_mask(mask, prefix_picks);
      num.clear();
      den.clear();
      walk_chain(prefix, pattern, start, num, den);
      const Rational w = weight_from_traces(num, den);
      if (w.is_zero()) continue;
      long long x = 0;
      for (int b : pattern) x += b;
      groups[x] += w;
    }
  }

  // Segment picks sit at the front of the suffix's pick slots.
  const long long seg_len = hi - lo;
  const OutcomePredicate& pred = refocused.predicate();
  const auto accept = [&](const std::vector<int>& picks) {
    if (pred.kind == PredicateKind::PositionIsCar) {
      return picks[static_cast<std::size_t>(pred.k - 1)] != 0;
    }
    long long cars = 0;
    for (long long i = 0; i < seg_len; ++i) cars += picks[static_cast<std::size_t>(i)];
    switch (pred.kind) {
      case PredicateKind::AtLeast: return cars >= pred.k;
      case PredicateKind::Exactly: return cars == pred.k;
      case PredicateKind::AllCars: return cars == seg_len;
      case PredicateKind::PositionIsCar: break;
    }
    return false;
  };

  Rational truncated(0);
  for (const auto& [x, weight] : groups) {
    const ChainState st{sc.cars - x, sc.goats() - (prefix_picks - x) - prefix_opens,
                        sc.doors - prefix_picks - prefix_opens};
    truncated += weight * sum_over_patterns(suffix, st, accept);
  }

  return MarginalCheck{truncated, outcome_probability(refocused, bound)};
}

nlohmann::json row_to_json(const WeightedSequence& row) {
  nlohmann::json num = nlohmann::json::array();
  for (const BigInt& f : row.numerator) num.push_back(f.str());
  nlohmann::json den = nlohmann::json::array();
  for (const BigInt& f : row.denominator) den.push_back(f.str());
  return nlohmann::json{{"sequence", row.sequence},
                        {"numerator", num},
                        {"denominator", den},
                        {"probability", row.probability.to_string()}};
}

}  // namespace monty
