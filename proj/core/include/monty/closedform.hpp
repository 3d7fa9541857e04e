#pragma once

#include "monty/combinatorics.hpp"
#include "monty/rational.hpp"
#include "monty/scenario.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace monty {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedSchedule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Direction { Increase, Decrease, Unchanged };
std::string to_string(Direction d);
Direction direction_of(const Rational& stay, const Rational& after_switch);

// A probability kept in the shape its formula produced: raw numerator and
// denominator before reduction. `display()` preserves that shape ("45000/55440",
// "10/18"); `value()` is the canonical reduced rational used for comparisons.
struct ExactValue {
  BigInt num;
  BigInt den;
  Rational value() const { return Rational(num, den); }
  std::string display() const { return num.str() + "/" + den.str(); }
};

// Stay-versus-switch summary for one family member.
struct SwitchReport {
  ExactValue stay;
  ExactValue after_switch;
  Rational improvement;  // after_switch / stay
  Direction direction = Direction::Unchanged;
};

// --- single pick, o openings, one switch (the classic shape) -------------
//
// Probability of a car after switching: c(d-1) / (d(d-1-o)).
// Large door counts stay cheap: everything is a short product, never a
// factorial. Preconditions: 1 <= c < d, 0 <= o <= d-c-1.
ExactValue mh2_switch_parts(long long c, long long d, long long o);
Rational mh2_switch_probability(long long c, long long d, long long o);

// Improvement over staying: (d-1) / (d-1-o), independent of c.
// Preconditions: d >= 2, 0 <= o <= d-2.
ExactValue mh2_improvement_parts(long long d, long long o);
Rational mh2_improvement_factor(long long d, long long o);

// --- p anterior picks, o openings, q posterior picks ---------------------
//
// Shared denominator of every posterior outcome count: ff(d,p) * ff(d-p-o,q).
BigInt mh3_denominator(long long d, long long p, long long o, long long q);

// Count of pick sequences with at least one posterior car:
//   sum over anterior splits x of
//     C(p,x) ff(c,x) ff(g,p-x) * sum_{y>=1} C(q,y) ff(c-x,y) ff(g-o-(p-x),q-y).
// Requires q >= 1: with no posterior picks the event is void.
BigInt mh3_at_least_one_numerator(long long c, long long g, long long p, long long o,
                                  long long q);

// Full stay-versus-switch report for the at-least-one-car question.
// Stay keeps the anterior picks: P = 1 - ff(g,p)/ff(d,p).
SwitchReport mh3_at_least_one_probability(const Scenario& sc, long long p, long long o,
                                          long long q);

// All picks must be cars. Stay: ff(c,p)/ff(d,p) (needs c >= p). Switch:
// all q posterior picks are cars, marginalized over the anterior split.
SwitchReport mh31_all_cars(const Scenario& sc, long long p, long long o, long long q);

// --- repeated switching: open o_i goats, then move, s times ---------------
//
// P(car after the s-th switch) =
//   c (d-1) (d-2-O_1) ... (d-s-O_{s-1})  /  [ d (d-1-O_1) ... (d-s-O_s) ]
// with O_i = o_1 + ... + o_i. Short product in s; million-door schedules
// are exact and instant.
ExactValue mh4_switch_parts(long long c, long long d, const std::vector<long long>& schedule);
Rational mh4_switch_probability(long long c, long long d, const std::vector<long long>& schedule);

// Posterior of each door the player has held, for the two-round schedule:
// [c/d, P_1, P_2]. Schedules with s != 2 throw UnsupportedSchedule.
std::vector<Rational> mh4_door_posteriors(long long c, long long d,
                                          const std::vector<long long>& schedule);

struct ImprovementFactors {
  Rational from_stay;          // P_s / (c/d)   — car count cancels
  Rational from_first_switch;  // P_s / P_1
};
ImprovementFactors mh4_improvement_factors(long long d, const std::vector<long long>& schedule);

}  // namespace monty
