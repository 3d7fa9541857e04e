#include "monty/hypergeom.hpp"

#include "monty/combinatorics.hpp"

namespace monty {

namespace {

void check_urn(const UrnSample& urn) {
  if (urn.population < 0 || urn.reds < 0 || urn.reds > urn.population ||
      urn.draws < 0 || urn.draws > urn.population) {
    throw std::domain_error("hypergeom: malformed urn");
  }
}

void check_shape(const Scenario& sc, long long p, long long o, long long q) {
  if (sc.cars < 1 || sc.cars >= sc.doors) throw std::domain_error("need 1 <= cars < doors");
  if (p < 1 || q < 1 || o < 0) throw std::domain_error("need p,q >= 1 and o >= 0");
  if (o > sc.goats() - p) throw std::domain_error("host could run out of goats to open");
  if (sc.doors - p - o < q) throw std::domain_error("not enough doors for the later draws");
}

}  // namespace

Rational hypergeom_pmf(long long r, const UrnSample& urn) {
  check_urn(urn);
  if (r < 0 || r > urn.draws || r > urn.reds || urn.draws - r > urn.population - urn.reds) {
    return Rational(0);
  }
  return Rational(binomial(urn.reds, r) * binomial(urn.population - urn.reds, urn.draws - r),
                  binomial(urn.population, urn.draws));
}

Rational chu_vandermonde_check(const UrnSample& urn) {
  check_urn(urn);
  Rational sum(0);
  for (long long r = 0; r <= urn.draws; ++r) sum += hypergeom_pmf(r, urn);
  return sum;
}

Rational two_phase_joint(long long x, long long y, long long p, long long r,
                         const Scenario& sc, long long opened) {
  check_shape(sc, p, opened, r);
  const Rational first = hypergeom_pmf(x, {sc.doors, sc.cars, p});
  if (first.is_zero()) return first;
  return first * hypergeom_pmf(y, {sc.doors - p - opened, sc.cars - x, r});
}

Rational mh3_via_hypergeom(const Scenario& sc, long long p, long long o, long long q,
                           const OutcomePredicate& pred) {
  check_shape(sc, p, o, q);
  if (pred.kind == PredicateKind::PositionIsCar) {
    throw UnsupportedPredicate("hypergeometric weights are order-free; position questions need the chain route");
  }

  const long long segment_length = [&] {
    switch (pred.segment) {
      case Segment::Anterior: return p;
      case Segment::Posterior: return q;
      case Segment::FinalRound: return q;  // the later draws are the final round here
      case Segment::All: return p + q;
    }
    return p + q;
  }();

  const auto qualifies = [&](long long cars) {
    switch (pred.kind) {
      case PredicateKind::AtLeast: return cars >= pred.k;
      case PredicateKind::Exactly: return cars == pred.k;
      case PredicateKind::AllCars: return cars == segment_length;
      case PredicateKind::PositionIsCar: return false;
    }
    return false;
  };

  Rational total(0);
  for (long long x = 0; x <= p; ++x) {
    const Rational first = hypergeom_pmf(x, {sc.doors, sc.cars, p});
    if (first.is_zero()) continue;
    if (pred.segment == Segment::Anterior) {
      if (qualifies(x)) total += first;
      continue;
    }
    const UrnSample later{sc.doors - p - o, sc.cars - x, q};
    for (long long y = 0; y <= q; ++y) {
      const long long count = pred.segment == Segment::All ? x + y : y;
      if (!qualifies(count)) continue;
      total += first * hypergeom_pmf(y, later);
    }
  }
  return total;
}

}  // namespace monty
