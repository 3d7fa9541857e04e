#include "monty/closedform.hpp"

namespace monty {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Increase: return "increase";
    case Direction::Decrease: return "decrease";
    case Direction::Unchanged: return "unchanged";
  }
  return "?";
}

Direction direction_of(const Rational& stay, const Rational& after_switch) {
  if (after_switch > stay) return Direction::Increase;
  if (after_switch < stay) return Direction::Decrease;
  return Direction::Unchanged;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

// Shared feasibility of the p-pick / o-open / q-pick shape.
void check_single_round(long long c, long long d, long long p, long long o, long long q) {
  require(c >= 1 && c < d, "need 1 <= cars < doors");
  require(p >= 1, "need at least one opening pick");
  require(q >= 1, "need at least one posterior pick");
  require(o >= 0, "openings cannot be negative");
  const long long g = d - c;
  require(o <= g - p, "host could run out of goats to open");
  require(d - p - o >= q, "not enough unclaimed doors for the posterior picks");
}

}  // namespace

ExactValue mh2_switch_parts(long long c, long long d, long long o) {
  check_single_round(c, d, 1, o, 1);
  return {BigInt(c) * (d - 1), BigInt(d) * (d - 1 - o)};
}

Rational mh2_switch_probability(long long c, long long d, long long o) {
  return mh2_switch_parts(c, d, o).value();
}

ExactValue mh2_improvement_parts(long long d, long long o) {
  require(d >= 2, "need at least two doors");
  require(o >= 0 && o <= d - 2, "openings must leave a door to switch to");
  return {BigInt(d - 1), BigInt(d - 1 - o)};
}

Rational mh2_improvement_factor(long long d, long long o) {
  return mh2_improvement_parts(d, o).value();
}

BigInt mh3_denominator(long long d, long long p, long long o, long long q) {
  require(d >= 1 && p >= 1 && q >= 1 && o >= 0, "need d,p,q >= 1 and o >= 0");
  require(d - p - o >= q, "not enough unclaimed doors for the posterior picks");
  return falling_factorial(d, p) * falling_factorial(d - p - o, q);
}

BigInt mh3_at_least_one_numerator(long long c, long long g, long long p, long long o,
                                  long long q) {
  check_single_round(c, c + g, p, o, q);
  BigInt total = 0;
  for (long long x = 0; x <= p; ++x) {
    const BigInt anterior =
        binomial(p, x) * falling_factorial(c, x) * falling_factorial(g, p - x);
    if (anterior == 0) continue;
    BigInt posterior = 0;
    for (long long y = 1; y <= q; ++y) {
      posterior += binomial(q, y) * falling_factorial(c - x, y) *
                   falling_factorial(g - o - (p - x), q - y);
    }
    total += anterior * posterior;
  }
  return total;
}

SwitchReport mh3_at_least_one_probability(const Scenario& sc, long long p, long long o,
                                          long long q) {
  check_single_round(sc.cars, sc.doors, p, o, q);
  const BigInt dp = falling_factorial(sc.doors, p);
  SwitchReport report;
  report.stay = {dp - falling_factorial(sc.goats(), p), dp};
  report.after_switch = {mh3_at_least_one_numerator(sc.cars, sc.goats(), p, o, q),
                         mh3_denominator(sc.doors, p, o, q)};
  report.improvement = report.after_switch.value() / report.stay.value();
  report.direction = direction_of(report.stay.value(), report.after_switch.value());
  return report;
}

SwitchReport mh31_all_cars(const Scenario& sc, long long p, long long o, long long q) {
  check_single_round(sc.cars, sc.doors, p, o, q);
  require(sc.cars >= p, "staying can only win if every anterior pick can be a car");
  const BigInt dp = falling_factorial(sc.doors, p);
  SwitchReport report;
  report.stay = {falling_factorial(sc.cars, p), dp};
  BigInt wins = 0;
  for (long long x = 0; x <= p; ++x) {
    wins += binomial(p, x) * falling_factorial(sc.cars, x) *
            falling_factorial(sc.goats(), p - x) * falling_factorial(sc.cars - x, q);
  }
  report.after_switch = {wins, mh3_denominator(sc.doors, p, o, q)};
  report.improvement = report.after_switch.value() / report.stay.value();
  report.direction = direction_of(report.stay.value(), report.after_switch.value());
  return report;
}

namespace {

void check_schedule(long long c, long long d, const std::vector<long long>& schedule) {
  require(c >= 1 && c < d, "need 1 <= cars < doors");
  require(!schedule.empty(), "need at least one opening round");
  const long long g = d - c;
  long long cum = 0;
  for (std::size_t i = 1; i <= schedule.size(); ++i) {
    const long long o = schedule[i - 1];
    require(o >= 0, "openings cannot be negative");
    cum += o;
    require(cum <= g - static_cast<long long>(i), "host could run out of goats to open");
    require(d - static_cast<long long>(i) - cum >= 1, "no unclaimed door left to switch to");
  }
}

}  // namespace

ExactValue mh4_switch_parts(long long c, long long d, const std::vector<long long>& schedule) {
  check_schedule(c, d, schedule);
  BigInt num = c;
  BigInt den = d;
  long long cum = 0;
  for (std::size_t i = 1; i <= schedule.size(); ++i) {
    num *= d - static_cast<long long>(i) - cum;  // unheld doors before this round opens
    cum += schedule[i - 1];
    den *= d - static_cast<long long>(i) - cum;  // and after
  }
  return {num, den};
}

Rational mh4_switch_probability(long long c, long long d,
                                const std::vector<long long>& schedule) {
  return mh4_switch_parts(c, d, schedule).value();
}

std::vector<Rational> mh4_door_posteriors(long long c, long long d,
                                          const std::vector<long long>& schedule) {
  if (schedule.size() != 2) {
    throw UnsupportedSchedule("door posteriors are defined for exactly two rounds");
  }
  check_schedule(c, d, schedule);
  return {Rational(BigInt(c), BigInt(d)),
          mh4_switch_probability(c, d, {schedule[0]}),
          mh4_switch_probability(c, d, schedule)};
}

ImprovementFactors mh4_improvement_factors(long long d,
                                           const std::vector<long long>& schedule) {
  // The car count cancels out of both ratios; evaluate with one car.
  check_schedule(1, d, schedule);
  const Rational last = mh4_switch_probability(1, d, schedule);
  return {last / Rational(1, d), last / mh4_switch_probability(1, d, {schedule[0]})};
}

}  // namespace monty
