#pragma once

#include "monty/rational.hpp"
#include "monty/scenario.hpp"

#include <stdexcept>

namespace monty {

struct UnsupportedPredicate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Drawing `draws` doors at once from `population`, of which `reds` are
// prizes. Order-free counterpart of the pick chains.
struct UrnSample {
  long long population = 0;
  long long reds = 0;
  long long draws = 0;
};

// P(exactly r reds) = C(reds,r) C(population-reds, draws-r) / C(population, draws).
// Exactly 0 outside the support. Throws std::domain_error on a malformed urn.
Rational hypergeom_pmf(long long r, const UrnSample& urn);

// Sum of the pmf over its whole support. Always exactly 1 — returning the
// sum (instead of asserting) lets callers watch the identity hold.
Rational chu_vandermonde_check(const UrnSample& urn);

// P(x cars in p opening draws AND y cars in r later draws) after `opened`
// goats left the pool: h(x; p, c, d) * h(y; r, c-x, d-p-opened).
Rational two_phase_joint(long long x, long long y, long long p, long long r,
                         const Scenario& sc, long long opened);

// The count predicate's probability in the p-pick / o-open / q-pick shape,
// evaluated purely with hypergeometric weights. Position predicates are
// order-sensitive and have no urn reading: UnsupportedPredicate.
Rational mh3_via_hypergeom(const Scenario& sc, long long p, long long o, long long q,
                           const OutcomePredicate& pred);

}  // namespace monty
