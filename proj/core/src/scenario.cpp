#include "monty/scenario.hpp"

#include <nlohmann/json.hpp>

namespace monty {

PhasePlan single_switch_plan(long long p, long long o, long long q) {
  return {Phase::pick(p), Phase::open(o), Phase::pick(q)};
}

PhasePlan multi_switch_plan(const std::vector<long long>& opens) {
  PhasePlan plan{Phase::pick(1)};
  for (long long o : opens) {
    plan.push_back(Phase::open(o));
    plan.push_back(Phase::pick(1));
  }
  return plan;
}

ValidatedGame ValidatedGame::validate(GameSpec spec) { return ValidatedGame(std::move(spec)); }

ValidatedGame::ValidatedGame(GameSpec spec) : spec_(std::move(spec)) {
  const Scenario& sc = spec_.scenario;
  if (sc.cars < 1 || sc.cars >= sc.doors) {
    throw ValidationError("scenario: need 1 <= cars < doors");
  }

  const PhasePlan& plan = spec_.plan;
  if (plan.empty() || plan.front().kind != PhaseKind::Pick) {
    throw ValidationError("plan: must start with a pick phase");
  }
  for (std::size_t i = 1; i < plan.size(); ++i) {
    if (plan[i].kind == plan[i - 1].kind) {
      throw ValidationError("plan: phases must alternate (use open(0) for a no-op round)");
    }
  }

  const long long goats = sc.goats();
  for (const Phase& ph : plan) {
    if (ph.kind == PhaseKind::Pick) {
      if (ph.count < 1) throw ValidationError("plan: pick phases need count >= 1");
      const long long unclaimed = sc.doors - total_picks_ - total_opens_;
      if (ph.count > unclaimed) {
        throw InsufficientDoors("plan: pick phase wants " + std::to_string(ph.count) +
                                " doors but only " + std::to_string(unclaimed) + " remain");
      }
      total_picks_ += ph.count;
    } else {
      if (ph.count < 0) throw ValidationError("plan: open phases need count >= 0");
      total_opens_ += ph.count;
      // Worst case every pick so far sat on a goat: the host must still
      // find this many distinct goats outside the picked doors.
      if (total_opens_ > goats - total_picks_) {
        throw InfeasibleOpening("plan: " + std::to_string(total_opens_) +
                                " cumulative openings but at worst " +
                                std::to_string(goats - total_picks_) +
                                " revealable goats remain");
      }
      ++open_phases_;
    }
  }

  anterior_picks_ = plan.front().count;
  posterior_begin_ = total_picks_;  // empty when nothing ever opens
  long long seen = 0;
  bool opened = false;
  for (const Phase& ph : plan) {
    if (ph.kind == PhaseKind::Open) {
      if (!opened) {
        opened = true;
        posterior_begin_ = seen;
      }
    } else {
      final_begin_ = seen;
      seen += ph.count;
    }
  }

  const auto [lo, hi] = segment_range(spec_.predicate.segment);
  const long long len = hi - lo;
  const OutcomePredicate& pred = spec_.predicate;
  switch (pred.kind) {
    case PredicateKind::AtLeast:
    case PredicateKind::Exactly:
      if (len == 0) throw BadPredicate("predicate: segment has no picks");
      if (pred.k < 0 || pred.k > len) {
        throw BadPredicate("predicate: k=" + std::to_string(pred.k) +
                           " outside segment of length " + std::to_string(len));
      }
      break;
    case PredicateKind::AllCars:
      if (len == 0) throw BadPredicate("predicate: segment has no picks");
      break;
    case PredicateKind::PositionIsCar:
      if (pred.k < 1 || pred.k > len) {
        throw BadPredicate("predicate: position " + std::to_string(pred.k) +
                           " outside segment of length " + std::to_string(len));
      }
      break;
  }
}

std::pair<long long, long long> ValidatedGame::segment_range(Segment s) const {
  switch (s) {
    case Segment::Anterior: return {0, anterior_picks_};
    case Segment::Posterior: return {posterior_begin_, total_picks_};
    case Segment::FinalRound: return {final_begin_, total_picks_};
    case Segment::All: return {0, total_picks_};
  }
  throw std::logic_error("segment_range: bad segment");
}

ValidatedGame ValidatedGame::with_predicate(const OutcomePredicate& p) const {
  GameSpec copy = spec_;
  copy.predicate = p;
  return validate(std::move(copy));
}

namespace {

Segment segment_from_string(const std::string& s) {
  if (s == "anterior") return Segment::Anterior;
  if (s == "posterior") return Segment::Posterior;
  if (s == "final-round") return Segment::FinalRound;
  if (s == "all") return Segment::All;
  throw BadPredicate("predicate: unknown segment '" + s + "'");
}

PredicateKind kind_from_string(const std::string& s) {
  if (s == "at_least") return PredicateKind::AtLeast;
  if (s == "exactly") return PredicateKind::Exactly;
  if (s == "all_cars") return PredicateKind::AllCars;
  if (s == "position_is_car") return PredicateKind::PositionIsCar;
  throw BadPredicate("predicate: unknown kind '" + s + "'");
}

}  // namespace

std::string to_string(Segment s) {
  switch (s) {
    case Segment::Anterior: return "anterior";
    case Segment::Posterior: return "posterior";
    case Segment::FinalRound: return "final-round";
    case Segment::All: return "all";
  }
  return "?";
}

std::string to_string(PredicateKind k) {
  switch (k) {
    case PredicateKind::AtLeast: return "at_least";
    case PredicateKind::Exactly: return "exactly";
    case PredicateKind::AllCars: return "all_cars";
    case PredicateKind::PositionIsCar: return "position_is_car";
  }
  return "?";
}

GameSpec game_from_json(const nlohmann::json& j) {
  GameSpec spec;
  spec.scenario.doors = j.at("doors").get<long long>();
  spec.scenario.cars = j.at("cars").get<long long>();
  for (const auto& ph : j.at("plan")) {
    if (ph.contains("pick") == ph.contains("open")) {
      throw ValidationError("plan: each phase needs exactly one of \"pick\"/\"open\"");
    }
    if (ph.contains("pick")) spec.plan.push_back(Phase::pick(ph.at("pick").get<long long>()));
    else spec.plan.push_back(Phase::open(ph.at("open").get<long long>()));
  }
  const auto& pred = j.at("predicate");
  spec.predicate.segment = segment_from_string(pred.at("segment").get<std::string>());
  spec.predicate.kind = kind_from_string(pred.at("kind").get<std::string>());
  if (spec.predicate.kind == PredicateKind::AllCars) {
    spec.predicate.k = 0;
  } else {
    spec.predicate.k = pred.at("k").get<long long>();
  }
  return spec;
}

nlohmann::json game_to_json(const GameSpec& spec) {
  nlohmann::json plan = nlohmann::json::array();
  for (const Phase& ph : spec.plan) {
    if (ph.kind == PhaseKind::Pick) plan.push_back({{"pick", ph.count}});
    else plan.push_back({{"open", ph.count}});
  }
  nlohmann::json pred{{"segment", to_string(spec.predicate.segment)},
                      {"kind", to_string(spec.predicate.kind)}};
  if (spec.predicate.kind != PredicateKind::AllCars) pred["k"] = spec.predicate.k;
  return nlohmann::json{{"doors", spec.scenario.doors},
                        {"cars", spec.scenario.cars},
                        {"plan", plan},
                        {"predicate", pred}};
}

GameSpec parse_game(std::string_view text) {
  return game_from_json(nlohmann::json::parse(text));
}

}  // namespace monty
