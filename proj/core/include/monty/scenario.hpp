#pragma once

#include "monty/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monty {

// A door population: `cars` prize doors among `doors` total (1 <= cars < doors).
struct Scenario {
  long long doors = 0;
  long long cars = 0;
  long long goats() const { return doors - cars; }
};

enum class PhaseKind { Pick, Open };

// One phase of a game plan. Pick(n): the player claims n fresh doors.
// Open(n): the host reveals n goats among doors nobody holds. Open(0) is a
// legal no-op round.
struct Phase {
  PhaseKind kind = PhaseKind::Pick;
  long long count = 0;

  static Phase pick(long long n) { return {PhaseKind::Pick, n}; }
  static Phase open(long long n) { return {PhaseKind::Open, n}; }

  friend bool operator==(const Phase&, const Phase&) = default;
};

// Alternating phases, starting with a Pick.
using PhasePlan = std::vector<Phase>;

// [Pick(p), Open(o), Pick(q)] — the single-switch-round family.
PhasePlan single_switch_plan(long long p, long long o, long long q);

// [Pick(1), Open(o1), Pick(1), ..., Open(os), Pick(1)] — one fresh pick
// after each opening round.
PhasePlan multi_switch_plan(const std::vector<long long>& opens);

// Which picks an outcome predicate ranges over.
enum class Segment {
  Anterior,    // picks of the first Pick phase
  Posterior,   // every pick after the first Open phase
  FinalRound,  // picks of the last Pick phase
  All,         // every pick
};

enum class PredicateKind { AtLeast, Exactly, AllCars, PositionIsCar };

// A question about the cars among a segment's picks. `k` is the threshold
// (at_least), the exact count (exactly), or a 1-based position within the
// segment (position_is_car); it is unused for all_cars.
struct OutcomePredicate {
  Segment segment = Segment::Posterior;
  PredicateKind kind = PredicateKind::AtLeast;
  long long k = 1;

  static OutcomePredicate at_least(Segment s, long long k) { return {s, PredicateKind::AtLeast, k}; }
  static OutcomePredicate exactly(Segment s, long long k) { return {s, PredicateKind::Exactly, k}; }
  static OutcomePredicate all_cars(Segment s) { return {s, PredicateKind::AllCars, 0}; }
  static OutcomePredicate position_is_car(Segment s, long long i) { return {s, PredicateKind::PositionIsCar, i}; }

  friend bool operator==(const OutcomePredicate&, const OutcomePredicate&) = default;
};

struct GameSpec {
  Scenario scenario;
  PhasePlan plan;
  OutcomePredicate predicate;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// The host could run out of fresh goats to reveal for some car layout.
struct InfeasibleOpening : ValidationError {
  using ValidationError::ValidationError;
};
// A pick phase asks for more unclaimed doors than can remain.
struct InsufficientDoors : ValidationError {
  using ValidationError::ValidationError;
};
// The predicate does not fit its segment (bad k, empty segment, ...).
struct BadPredicate : ValidationError {
  using ValidationError::ValidationError;
};

// A GameSpec checked to be playable for every possible car layout, with the
// derived views the engines need. Immutable once constructed.
class ValidatedGame {
public:
  static ValidatedGame validate(GameSpec spec);

  const Scenario& scenario() const { return spec_.scenario; }
  const PhasePlan& plan() const { return spec_.plan; }
  const OutcomePredicate& predicate() const { return spec_.predicate; }

  long long total_picks() const { return total_picks_; }
  long long total_opens() const { return total_opens_; }
  long long anterior_picks() const { return anterior_picks_; }
  long long posterior_picks() const { return total_picks_ - posterior_begin_; }
  long long switch_rounds() const { return open_phases_; }

  // Half-open range of pick-slot indices (0-based, plan order) a segment
  // covers. Posterior is empty when the plan never opens a door.
  std::pair<long long, long long> segment_range(Segment s) const;

  // The same game with a different question attached (revalidated).
  ValidatedGame with_predicate(const OutcomePredicate& p) const;

private:
  explicit ValidatedGame(GameSpec spec);

  GameSpec spec_;
  long long total_picks_ = 0;
  long long total_opens_ = 0;
  long long anterior_picks_ = 0;
  long long posterior_begin_ = 0;  // pick-slot index where the posterior starts
  long long final_begin_ = 0;      // pick-slot index where the last pick phase starts
  long long open_phases_ = 0;
};

// JSON form:
//   {"doors": 12, "cars": 5,
//    "plan": [{"pick": 3}, {"open": 2}, {"pick": 2}],
//    "predicate": {"segment": "posterior", "kind": "at_least", "k": 1}}
// Segment strings: "anterior" | "posterior" | "final-round" | "all".
// Kind strings: "at_least" | "exactly" | "all_cars" | "position_is_car".
GameSpec game_from_json(const nlohmann::json& j);
nlohmann::json game_to_json(const GameSpec& spec);
GameSpec parse_game(std::string_view text);

std::string to_string(Segment s);
std::string to_string(PredicateKind k);

}  // namespace monty
