#include "monty/closedform.hpp"

#include "monty/enumeration.hpp"
#include "monty/scenario.hpp"

#include <doctest.h>

#include <vector>

using namespace monty;

namespace {

ValidatedGame single_round_game(long long d, long long c, long long p, long long o, long long q,
                                OutcomePredicate pred) {
  return ValidatedGame::validate({{d, c}, single_switch_plan(p, o, q), pred});
}

}  // namespace

TEST_SUITE("closedform") {

TEST_CASE("directions") {
  CHECK(to_string(Direction::Increase) == "increase");
  CHECK(to_string(Direction::Decrease) == "decrease");
  CHECK(to_string(Direction::Unchanged) == "unchanged");
  CHECK(direction_of(Rational(1, 3), Rational(2, 3)) == Direction::Increase);
  CHECK(direction_of(Rational(37, 44), Rational(125, 154)) == Direction::Decrease);
  CHECK(direction_of(Rational(1, 3), Rational(2, 6)) == Direction::Unchanged);
}

TEST_CASE("one pick, o openings, one switch") {
  const auto classic = mh2_switch_parts(1, 3, 1);
  CHECK(classic.display() == "2/3");
  CHECK(classic.value() == Rational(2, 3));
  CHECK(mh2_switch_probability(1, 3, 0) == Rational(1, 3));  // switching blind changes nothing
  CHECK(mh2_switch_probability(1, 4, 2) == Rational(3, 4));
  // Picked-car arm: 2/6 * 1/2; picked-goat arm: 4/6 * 1 (all three goats opened).
  CHECK(mh2_switch_probability(2, 6, 3) == Rational(5, 6));

  // Shape is preserved: c(d-1) over d(d-1-o), unreduced.
  const auto parts = mh2_switch_parts(2, 6, 3);
  CHECK(parts.num == 2 * 5);
  CHECK(parts.den == 6 * 2);

  CHECK_THROWS_AS(mh2_switch_parts(0, 3, 1), DomainError);
  CHECK_THROWS_AS(mh2_switch_parts(3, 3, 0), DomainError);
  CHECK_THROWS_AS(mh2_switch_parts(1, 3, 2), DomainError);  // opening both goats leaves no door
  CHECK_THROWS_AS(mh2_switch_parts(1, 3, -1), DomainError);
}

TEST_CASE("large door counts stay exact and cheap") {
  const auto sw = mh2_switch_parts(12345678, 123456789, 1234567);
  CHECK(sw.value().to_decimal(6) == "0.101010");

  const auto factor = mh2_improvement_parts(123456789, 1234567);
  CHECK(factor.value().to_decimal(6) == "1.010101");
  CHECK(factor.value() == Rational(123456788, 122222221));

  // The extreme schedule: open all goats but one.
  const auto extreme = mh2_improvement_parts(123456789, 111111110);
  CHECK(extreme.display() == "123456788/12345678");
  CHECK(extreme.value() == Rational(61728394, 6172839));
  CHECK(extreme.value().to_decimal(7) == "10.0000006");

  CHECK(mh2_improvement_factor(3, 1) == Rational(2));
  CHECK(mh2_improvement_factor(3, 0) == Rational(1));
  CHECK_THROWS_AS(mh2_improvement_parts(3, 2), DomainError);  // o <= d-2
  CHECK_THROWS_AS(mh2_improvement_parts(1, 0), DomainError);
}

TEST_CASE("compound counts for the twelve-door family") {
  CHECK(mh3_denominator(12, 3, 2, 2) == 55440);  // 1320 * 42
  CHECK(mh3_at_least_one_numerator(5, 7, 3, 2, 2) == 45000);

  const auto rep = mh3_at_least_one_probability({12, 5}, 3, 2, 2);
  CHECK(rep.after_switch.display() == "45000/55440");
  CHECK(rep.after_switch.value() == Rational(125, 154));
  CHECK(rep.stay.display() == "1110/1320");
  CHECK(rep.stay.value() == Rational(37, 44));
  CHECK(rep.improvement == Rational(250, 259));
  CHECK(rep.direction == Direction::Decrease);

  // The classic is the p = o = q = 1 member.
  const auto one = mh3_at_least_one_probability({3, 1}, 1, 1, 1);
  CHECK(one.after_switch.value() == Rational(2, 3));
  CHECK(one.stay.value() == Rational(1, 3));
  CHECK(one.improvement == Rational(2));
  CHECK(one.direction == Direction::Increase);

  CHECK_THROWS_AS(mh3_at_least_one_probability({12, 5}, 0, 2, 2), DomainError);
  CHECK_THROWS_AS(mh3_at_least_one_probability({12, 5}, 3, 2, 0), DomainError);
  CHECK_THROWS_AS(mh3_at_least_one_probability({12, 5}, 3, 5, 2), DomainError);
  CHECK_THROWS_AS(mh3_at_least_one_probability({12, 5}, 3, 2, 8), DomainError);
}

TEST_CASE("compound counts equal chain enumeration across a grid") {
  for (long long d = 2; d <= 8; ++d) {
    for (long long c = 1; c < d; ++c) {
      for (long long p = 1; p + 1 <= d && p <= 3; ++p) {
        for (long long o = 0; o <= d - c - p; ++o) {
          for (long long q = 1; q <= d - p - o && q <= 3; ++q) {
            CAPTURE(d); CAPTURE(c); CAPTURE(p); CAPTURE(o); CAPTURE(q);
            const auto rep = mh3_at_least_one_probability({d, c}, p, o, q);
            const auto game = single_round_game(
                d, c, p, o, q, OutcomePredicate::at_least(Segment::Posterior, 1));
            CHECK(rep.after_switch.value() == outcome_probability(game));
            const auto stay_game = game.with_predicate(
                OutcomePredicate::at_least(Segment::Anterior, 1));
            CHECK(rep.stay.value() == outcome_probability(stay_game));
          }
        }
      }
    }
  }
}

TEST_CASE("all-cars variant") {
  const auto classic = mh31_all_cars({3, 1}, 1, 1, 1);
  CHECK(classic.stay.value() == Rational(1, 3));
  CHECK(classic.after_switch.value() == Rational(2, 3));

  const auto rep = mh31_all_cars({12, 5}, 3, 2, 2);
  CHECK(rep.stay.display() == "60/1320");  // ff(5,3)/ff(12,3)
  const auto game = single_round_game(12, 5, 3, 2, 2,
                                      OutcomePredicate::all_cars(Segment::Posterior));
  CHECK(rep.after_switch.value() == outcome_probability(game));

  // Needs at least as many cars as opening picks for the stay arm.
  CHECK_THROWS_AS(mh31_all_cars({12, 2}, 3, 2, 2), DomainError);

  for (long long d = 3; d <= 8; ++d) {
    for (long long c = 1; c < d; ++c) {
      for (long long p = 1; p <= c && p <= 2; ++p) {
        for (long long o = 0; o <= d - c - p; ++o) {
          for (long long q = 1; q <= d - p - o && q <= 3; ++q) {
            CAPTURE(d); CAPTURE(c); CAPTURE(p); CAPTURE(o); CAPTURE(q);
            const auto r = mh31_all_cars({d, c}, p, o, q);
            const auto g = single_round_game(
                d, c, p, o, q, OutcomePredicate::all_cars(Segment::Posterior));
            CHECK(r.after_switch.value() == outcome_probability(g));
          }
        }
      }
    }
  }
}

TEST_CASE("repeated switching") {
  const auto parts = mh4_switch_parts(1, 6, {2, 1});
  CHECK(parts.display() == "10/18");
  CHECK(parts.value() == Rational(5, 9));

  const auto posts = mh4_door_posteriors(1, 6, {2, 1});
  REQUIRE(posts.size() == 3);
  CHECK(posts[0] == Rational(1, 6));
  CHECK(posts[1] == Rational(5, 18));
  CHECK(posts[2] == Rational(5, 9));
  // Three doors opened: the three the player held are all that remain, so
  // these posteriors exhaust the car's location.
  CHECK(posts[0] + posts[1] + posts[2] == Rational(1));
  // With unheld doors left over the held trio carries less than full mass.
  const auto slack = mh4_door_posteriors(1, 8, {1, 1});
  CHECK(slack[0] == Rational(1, 8));
  CHECK(slack[1] == Rational(7, 48));
  CHECK(slack[2] == Rational(35, 192));
  CHECK(slack[0] + slack[1] + slack[2] == Rational(87, 192));

  const auto factors = mh4_improvement_factors(6, {2, 1});
  CHECK(factors.from_stay == Rational(10, 3));
  CHECK(factors.from_first_switch == Rational(2));

  // A million doors, almost all opened at once, then one more.
  const auto million = mh4_switch_parts(1, 1000000, {999996, 1});
  CHECK(million.display() == "1999998/3000000");
  CHECK(million.value() == Rational(333333, 500000));
  const auto mposts = mh4_door_posteriors(1, 1000000, {999996, 1});
  CHECK(mposts[0] == Rational(1, 1000000));
  CHECK(mposts[1] * BigInt(3000000) == Rational(999999));
  CHECK(mposts[2] * BigInt(3000000) == Rational(1999998));

  CHECK_THROWS_AS(mh4_switch_parts(1, 6, {}), DomainError);
  CHECK_THROWS_AS(mh4_switch_parts(1, 6, {5}), DomainError);     // opens every goat
  CHECK_THROWS_AS(mh4_switch_parts(1, 6, {2, 3}), DomainError);  // second round overdraws
  CHECK_THROWS_AS(mh4_door_posteriors(1, 6, {1}), UnsupportedSchedule);
  CHECK_THROWS_AS(mh4_door_posteriors(1, 8, {1, 1, 1}), UnsupportedSchedule);
}

TEST_CASE("one-round schedules reduce to the simple family") {
  int cells = 0;
  for (long long d = 3; d <= 40; ++d) {
    for (long long c = 1; c < d; c += 3) {
      for (long long o = 0; o <= d - c - 1; o += 2) {
        CAPTURE(d); CAPTURE(c); CAPTURE(o);
        CHECK(mh4_switch_probability(c, d, {o}) == mh2_switch_probability(c, d, o));
        ++cells;
      }
    }
  }
  CHECK(cells > 500);
}

TEST_CASE("repeated switching agrees with enumeration") {
  const std::vector<std::pair<long long, std::vector<long long>>> games{
      {6, {2, 1}}, {7, {1, 2}}, {9, {1, 1, 1}}, {5, {1, 1}}, {8, {2, 2}}};
  for (const auto& [d, schedule] : games) {
    for (long long c = 1; c <= 3; ++c) {
      CAPTURE(d); CAPTURE(c);
      GameSpec spec{{d, c}, multi_switch_plan(schedule),
                    OutcomePredicate::at_least(Segment::FinalRound, 1)};
      Rational closed;
      try {
        closed = mh4_switch_probability(c, d, schedule);
      } catch (const DomainError&) {
        // The round formula and the validator must agree on feasibility.
        CHECK_THROWS_AS(ValidatedGame::validate(spec), ValidationError);
        continue;
      }
      CHECK(closed == outcome_probability(ValidatedGame::validate(spec)));
    }
  }
}

}  // TEST_SUITE
