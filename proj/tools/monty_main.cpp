// monty — exact engine for generalized door-switching games.
//
// Subcommands: compute, enumerate, verify, simulate, sweep. All output is
// line-delimited JSON (sweep can emit CSV). Identical invocations produce
// byte-identical output. Exit codes: 0 success, 1 route disagreement,
// 2 invalid input.

#include "monty/closedform.hpp"
#include "monty/enumeration.hpp"
#include "monty/hypergeom.hpp"
#include "monty/montecarlo.hpp"
#include "monty/report.hpp"
#include "monty/scenario.hpp"
#include "monty/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using monty::report::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
  int digits = 6;
  long long enum_bound = monty::kDefaultEnumerationBound;
};

struct GameInputs {
  std::string variant;
  long long doors = 0;
  long long cars = 0;
  long long pick = 0;
  long long open_count = -1;
  long long switch_pick = 0;
  std::vector<long long> schedule;
  std::string game_json;
};

struct SingleRound {
  long long p = 0;
  long long o = 0;
  long long q = 0;
};

std::optional<SingleRound> single_round_of(const monty::PhasePlan& plan) {
  if (plan.size() == 3 && plan[0].kind == monty::PhaseKind::Pick &&
      plan[1].kind == monty::PhaseKind::Open && plan[2].kind == monty::PhaseKind::Pick) {
    return SingleRound{plan[0].count, plan[1].count, plan[2].count};
  }
  return std::nullopt;
}

long long open_phase_count(const monty::PhasePlan& plan) {
  long long n = 0;
  for (const auto& ph : plan) n += ph.kind == monty::PhaseKind::Open ? 1 : 0;
  return n;
}

// Everything one invocation needs: the game, its echo, the closed-form
// headline when the family has one, the variant-specific report block, and
// the errata the computation touches.
struct Analysis {
  std::string variant;
  monty::GameSpec spec;
  ordered_json params = ordered_json::object();
  ordered_json report = ordered_json::object();
  std::optional<monty::ExactValue> closed;
  std::vector<monty::report::Erratum> errata;
};

void require_input(bool ok, const std::string& what) {
  if (!ok) throw monty::ValidationError(what);
}

void attach_errata(Analysis& a) {
  using monty::PredicateKind;
  using monty::Segment;
  const auto sr = single_round_of(a.spec.plan);
  const auto& sc = a.spec.scenario;
  const auto& pred = a.spec.predicate;
  if (sr) {
    const bool at_least_one =
        pred.kind == PredicateKind::AtLeast && pred.k == 1 && pred.segment == Segment::Posterior;
    if (at_least_one && sc.doors == 12 && sc.cars == 5 && sr->p == 3 && sr->o == 2 && sr->q == 2) {
      a.errata.push_back(monty::report::erratum_anterior_stay());
    }
    if (at_least_one && sc.doors == 6 && sc.cars == 1 && sr->p == 2 && sr->q == 1 &&
        sr->o >= 1 && sr->o <= 3) {
      a.errata.push_back(monty::report::erratum_with_replacement());
    }
    if (pred.kind == PredicateKind::AllCars) {
      a.errata.push_back(monty::report::erratum_all_cars_denominator());
    }
    if (sr->p == 1 && sr->q == 1 && sc.doors == 123456789 && sc.cars == 12345678 &&
        sr->o == 111111110) {
      a.errata.push_back(monty::report::erratum_max_opening_factor());
    }
  }
  if (open_phase_count(a.spec.plan) >= 2) {
    a.errata.push_back(monty::report::erratum_multi_switch_goat_term());
  }
}

ordered_json switch_report_json(const monty::SwitchReport& rep, int digits,
                                const char* stay_key = "stay", const char* switch_key = "switch") {
  using monty::report::value_json;
  ordered_json out;
  out[stay_key] = value_json(rep.stay, digits);
  out[switch_key] = value_json(rep.after_switch, digits);
  out["improvement_factor"] = value_json(rep.improvement, digits);
  out["direction"] = monty::to_string(rep.direction);
  return out;
}

Analysis build_analysis(const GameInputs& in, int digits) {
  using monty::OutcomePredicate;
  using monty::Segment;
  using monty::report::value_json;

  Analysis a;
  a.variant = in.variant;

  if (in.variant == "mh1" || in.variant == "mh2") {
    long long d = in.doors, c = in.cars, o = in.open_count;
    if (in.variant == "mh1") {
      require_input(in.doors == 0 && in.cars == 0 && in.open_count == -1,
                    "mh1 is the fixed three-door game; it takes no scenario flags");
      d = 3;
      c = 1;
      o = 1;
    } else {
      require_input(d > 0 && c > 0 && o >= 0, "mh2 needs --doors, --cars, --open");
    }
    a.spec = {{d, c}, monty::single_switch_plan(1, o, 1),
              OutcomePredicate::at_least(Segment::Posterior, 1)};
    a.params = {{"doors", d}, {"cars", c}, {"open", o}};
    const auto switch_parts = monty::mh2_switch_parts(c, d, o);
    const auto factor_parts = monty::mh2_improvement_parts(d, o);
    a.closed = switch_parts;
    const monty::ExactValue stay{monty::BigInt(c), monty::BigInt(d)};
    a.report["stay"] = value_json(stay, digits);
    a.report["switch"] = value_json(switch_parts, digits);
    a.report["improvement_factor"] = value_json(factor_parts, digits);
    a.report["direction"] =
        monty::to_string(monty::direction_of(stay.value(), switch_parts.value()));
  } else if (in.variant == "mh3" || in.variant == "mh31") {
    const long long d = in.doors, c = in.cars, p = in.pick, o = in.open_count,
                    q = in.switch_pick;
    require_input(d > 0 && c > 0 && p > 0 && o >= 0 && q > 0,
                  in.variant + " needs --doors, --cars, --pick, --open, --switch-pick");
    a.params = {{"doors", d}, {"cars", c}, {"pick", p}, {"open", o}, {"switch_pick", q}};
    if (in.variant == "mh3") {
      a.spec = {{d, c}, monty::single_switch_plan(p, o, q),
                OutcomePredicate::at_least(Segment::Posterior, 1)};
      const auto rep = monty::mh3_at_least_one_probability({d, c}, p, o, q);
      a.closed = rep.after_switch;
      a.report = switch_report_json(rep, digits);
    } else {
      a.spec = {{d, c}, monty::single_switch_plan(p, o, q),
                OutcomePredicate::all_cars(Segment::Posterior)};
      const auto rep = monty::mh31_all_cars({d, c}, p, o, q);
      a.closed = rep.after_switch;
      a.report = switch_report_json(rep, digits, "stay_all_cars", "switch_all_cars");
    }
  } else if (in.variant == "mh4") {
    const long long d = in.doors, c = in.cars;
    require_input(d > 0 && c > 0 && !in.schedule.empty(),
                  "mh4 needs --doors, --cars, --schedule");
    a.spec = {{d, c}, monty::multi_switch_plan(in.schedule),
              OutcomePredicate::at_least(Segment::FinalRound, 1)};
    a.params = {{"doors", d}, {"cars", c}, {"schedule", in.schedule}};
    const auto parts = monty::mh4_switch_parts(c, d, in.schedule);
    a.closed = parts;
    const monty::ExactValue stay{monty::BigInt(c), monty::BigInt(d)};
    a.report["stay"] = value_json(stay, digits);
    a.report["switch"] = value_json(parts, digits);
    const auto factors = monty::mh4_improvement_factors(d, in.schedule);
    a.report["improvement_factor_from_stay"] = value_json(factors.from_stay, digits);
    a.report["improvement_factor_from_first_switch"] =
        value_json(factors.from_first_switch, digits);
    a.report["direction"] = monty::to_string(monty::direction_of(stay.value(), parts.value()));
    if (in.schedule.size() == 2) {
      const auto posteriors = monty::mh4_door_posteriors(c, d, in.schedule);
      ordered_json arr = ordered_json::array();
      for (const auto& post : posteriors) {
        // Shared-denominator display: every posterior over the full product
        // denominator, the way the family is usually quoted (3/18, 5/18, 10/18).
        const monty::BigInt num = post.numerator() * (parts.den / post.denominator());
        arr.push_back(value_json(monty::ExactValue{num, parts.den}, digits));
      }
      a.report["door_posteriors"] = std::move(arr);
    }
  } else if (in.variant == "custom") {
    require_input(!in.game_json.empty(), "custom needs --game (or --config)");
    a.spec = monty::parse_game(in.game_json);
    a.params = ordered_json::parse(monty::game_to_json(a.spec).dump());
  } else {
    require_input(false, "unknown variant '" + in.variant + "'");
  }

  attach_errata(a);
  return a;
}

bool hypergeom_applies(const monty::GameSpec& spec) {
  return single_round_of(spec.plan).has_value() &&
         spec.predicate.kind != monty::PredicateKind::PositionIsCar;
}

// The named routes, in emission order, each producing the same quantity:
// the probability of the game's predicate.
struct RouteRun {
  std::vector<std::pair<std::string, monty::Rational>> values;
  ordered_json json = ordered_json::object();
};

RouteRun run_routes(const Analysis& a, const monty::ValidatedGame& game, const CommonOpts& opts,
                    bool include_enumeration, const std::string& corrupt) {
  using monty::report::value_json;
  RouteRun run;
  const monty::Rational nudge(1, 1000000007);

  const auto add = [&](const std::string& name, const monty::Rational& value,
                       const std::optional<monty::ExactValue>& parts) {
    monty::Rational v = value;
    if (name == corrupt) v += nudge;
    run.values.emplace_back(name, v);
    if (parts && name != corrupt) {
      run.json[name] = value_json(*parts, opts.digits);
    } else {
      run.json[name] = value_json(v, opts.digits);
    }
  };

  if (a.closed) add("closedform", a.closed->value(), a.closed);
  if (hypergeom_applies(a.spec)) {
    const auto sr = *single_round_of(a.spec.plan);
    add("hypergeom",
        monty::mh3_via_hypergeom(a.spec.scenario, sr.p, sr.o, sr.q, a.spec.predicate),
        std::nullopt);
  }
  if (include_enumeration && game.total_picks() <= opts.enum_bound) {
    add("enumeration", monty::outcome_probability(game, opts.enum_bound), std::nullopt);
  }
  // A custom game outside every closed family still needs a value.
  if (run.values.empty()) {
    add("enumeration", monty::outcome_probability(game, opts.enum_bound), std::nullopt);
  }
  return run;
}

int emit_envelope(const Analysis& a, const RouteRun& run, ordered_json results, bool exit_on_disagreement) {
  std::vector<monty::Rational> values;
  values.reserve(run.values.size());
  for (const auto& [name, v] : run.values) values.push_back(v);
  const bool agreement = monty::report::routes_agree(values);
  std::cout << monty::report::make_envelope(a.variant, a.params, std::move(results), agreement,
                                            a.errata)
                   .dump()
            << "\n";
  if (exit_on_disagreement && !agreement) return kExitDisagreement;
  return kExitOk;
}

int run_compute_like(const Analysis& a, const CommonOpts& opts, bool verify,
                     const std::string& corrupt) {
  const auto game = monty::ValidatedGame::validate(a.spec);
  const RouteRun run = run_routes(a, game, opts, verify, corrupt);
  ordered_json results;
  results["routes"] = run.json;
  if (!a.report.empty()) {
    results["report"] = a.report;
  } else {
    results["report"] = ordered_json{{"value", run.json.begin().value()}};
  }
  return emit_envelope(a, run, std::move(results), verify);
}

std::string format_double(double x, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

ordered_json simulation_json(const monty::SimulationEstimate& est, int digits) {
  return ordered_json{{"trials", est.trials},
                      {"seed", est.seed},
                      {"workers", est.workers},
                      {"successes", est.successes},
                      {"estimate", monty::Rational(monty::BigInt(est.successes),
                                                   monty::BigInt(est.trials))
                                       .to_decimal(digits)},
                      {"std_error", format_double(est.std_error, "%.6e")}};
}

std::optional<monty::Rational> exact_for(const Analysis& a, const monty::ValidatedGame& game,
                                         const CommonOpts& opts) {
  if (a.closed) return a.closed->value();
  if (game.total_picks() <= opts.enum_bound) {
    return monty::outcome_probability(game, opts.enum_bound);
  }
  return std::nullopt;
}

void attach_exact(ordered_json& results, const char* exact_key, const char* z_key,
                  const std::optional<monty::Rational>& exact,
                  const monty::SimulationEstimate& est, int digits) {
  if (!exact) return;
  results[exact_key] = monty::report::value_json(*exact, digits);
  const double gap = est.estimate - exact->to_double();
  const double z = est.std_error > 0 ? gap / est.std_error : (gap == 0 ? 0.0 : HUGE_VAL);
  results[z_key] = format_double(z, "%.3f");
}

int run_simulate(const Analysis& a, const CommonOpts& opts, std::uint64_t trials,
                 std::uint64_t seed, unsigned workers, bool compare) {
  const auto game = monty::ValidatedGame::validate(a.spec);
  Analysis annotated = a;
  annotated.params["trials"] = trials;
  annotated.params["seed"] = seed;

  ordered_json results;
  RouteRun no_routes;
  no_routes.values.emplace_back("simulation", monty::Rational(0));  // single route: trivially agrees

  if (!compare) {
    const auto est = monty::simulate(game, trials, seed, workers);
    results["simulation"] = simulation_json(est, opts.digits);
    attach_exact(results, "exact", "z_score", exact_for(a, game, opts), est, opts.digits);
  } else {
    const auto cmp = monty::simulate_policy_comparison(game, trials, seed, workers);
    results["stay"] = simulation_json(cmp.stay, opts.digits);
    results["switch"] = simulation_json(cmp.switched, opts.digits);
    const auto stay_game = game.with_predicate(
        {monty::Segment::Anterior, game.predicate().kind, game.predicate().k});
    Analysis stay_analysis = a;
    stay_analysis.closed.reset();  // stay arm has no headline closed form; enumerate instead
    attach_exact(results, "exact_stay", "z_score_stay",
                 exact_for(stay_analysis, stay_game, opts), cmp.stay, opts.digits);
    attach_exact(results, "exact_switch", "z_score_switch", exact_for(a, game, opts),
                 cmp.switched, opts.digits);
  }

  return emit_envelope(annotated, no_routes, std::move(results), false);
}

int run_enumerate(const Analysis& a, const CommonOpts& opts) {
  const auto game = monty::ValidatedGame::validate(a.spec);
  monty::enumerate_visit(
      game,
      [&](const monty::WeightedSequence& row) {
        ordered_json num = ordered_json::array();
        for (const auto& f : row.numerator) num.push_back(f.str());
        ordered_json den = ordered_json::array();
        for (const auto& f : row.denominator) den.push_back(f.str());
        std::cout << ordered_json{{"sequence", row.sequence},
                                  {"numerator", std::move(num)},
                                  {"denominator", std::move(den)},
                                  {"probability", row.probability.to_string()}}
                         .dump()
                  << "\n";
      },
      opts.enum_bound);
  return kExitOk;
}

struct Range {
  long long lo = 0;
  long long hi = -1;
  long long size() const { return hi < lo ? 0 : hi - lo + 1; }
};

Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const long long v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw monty::ValidationError("sweep: malformed range '" + text + "' (want N or LO:HI)");
  }
}

int run_sweep(const std::string& doors, const std::string& cars, const std::string& pick,
              const std::string& open_range, const std::string& switch_pick, bool csv,
              long long max_cells, const CommonOpts& opts) {
  const Range rd = parse_range(doors), rc = parse_range(cars), rp = parse_range(pick),
              ro = parse_range(open_range), rq = parse_range(switch_pick);
  const long long cells = rd.size() * rc.size() * rp.size() * ro.size() * rq.size();
  require_input(cells > 0, "sweep: empty parameter grid");
  require_input(cells <= max_cells, "sweep: " + std::to_string(cells) +
                                        " cells exceed --max-cells " + std::to_string(max_cells));

  if (csv) {
    std::cout << "doors,cars,pick,open,switch_pick,stay,stay_decimal,switch,switch_decimal,"
                 "improvement_factor,improvement_decimal,direction\n";
  }
  for (long long d = rd.lo; d <= rd.hi; ++d) {
    for (long long c = rc.lo; c <= rc.hi; ++c) {
      for (long long p = rp.lo; p <= rp.hi; ++p) {
        for (long long o = ro.lo; o <= ro.hi; ++o) {
          for (long long q = rq.lo; q <= rq.hi; ++q) {
            monty::SwitchReport rep;
            try {
              rep = monty::mh3_at_least_one_probability({d, c}, p, o, q);
            } catch (const monty::DomainError&) {
              continue;  // infeasible corner of the requested grid
            }
            if (csv) {
              std::cout << d << ',' << c << ',' << p << ',' << o << ',' << q << ','
                        << rep.stay.value().to_string() << ','
                        << rep.stay.value().to_decimal(opts.digits) << ','
                        << rep.after_switch.value().to_string() << ','
                        << rep.after_switch.value().to_decimal(opts.digits) << ','
                        << rep.improvement.to_string() << ','
                        << rep.improvement.to_decimal(opts.digits) << ','
                        << monty::to_string(rep.direction) << "\n";
            } else {
              std::cout << ordered_json{{"doors", d},
                                        {"cars", c},
                                        {"pick", p},
                                        {"open", o},
                                        {"switch_pick", q},
                                        {"stay", monty::report::value_json(rep.stay, opts.digits)},
                                        {"switch", monty::report::value_json(rep.after_switch,
                                                                             opts.digits)},
                                        {"improvement_factor",
                                         monty::report::value_json(rep.improvement, opts.digits)},
                                        {"direction", monty::to_string(rep.direction)}}
                               .dump()
                        << "\n";
            }
          }
        }
      }
    }
  }
  return kExitOk;
}

std::vector<std::string> read_config_lines(const std::string& path) {
  std::ifstream in(path);
  require_input(in.good(), "cannot open config file '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }
  require_input(!lines.empty(), "config file '" + path + "' has no scenarios");
  return lines;
}

// Adds the shared scenario flags to a subcommand.
void add_game_flags(CLI::App* cmd, GameInputs& in, std::string& config_path) {
  cmd->add_option("--variant", in.variant, "Game family: mh1, mh2, mh3, mh31, mh4, custom");
  cmd->add_option("--doors", in.doors, "Total doors");
  cmd->add_option("--cars", in.cars, "Prize doors");
  cmd->add_option("--pick", in.pick, "Opening picks (p)");
  cmd->add_option("--open", in.open_count, "Goats the host reveals (o)");
  cmd->add_option("--switch-pick", in.switch_pick, "Picks after the reveal (q)");
  cmd->add_option("--schedule", in.schedule, "Opening counts per round, comma-separated (mh4)")
      ->delimiter(',');
  cmd->add_option("--game", in.game_json, "Inline game JSON (custom variant)");
  cmd->add_option("--config", config_path,
                  "File with one game JSON per line; emits one envelope per line");
}

void add_common_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--digits", opts.digits, "Fractional digits in decimals")
      ->default_val(6)
      ->check(CLI::Range(0, 40));
  cmd->add_option("--enum-bound", opts.enum_bound,
                  "Maximum total picks the enumeration route expands (2^picks patterns)")
      ->default_val(monty::kDefaultEnumerationBound)
      ->check(CLI::Range(1, 62));
}

GameInputs resolve_variant(GameInputs in, const std::string& config_line) {
  if (!config_line.empty()) {
    in.variant = "custom";
    in.game_json = config_line;
  } else if (in.variant.empty()) {
    in.variant = in.game_json.empty() ? "" : "custom";
    require_input(!in.variant.empty(), "need --variant, --game, or --config");
  }
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact probabilities for generalized door-switching games"};
  app.set_version_flag("--version", std::string("monty ") + monty::kVersion);
  app.require_subcommand(1);

  GameInputs inputs;
  CommonOpts opts;
  std::string config_path;
  std::string corrupt_route;

  auto* compute = app.add_subcommand("compute", "Closed-form and urn-weight answers");
  add_game_flags(compute, inputs, config_path);
  add_common_flags(compute, opts);

  auto* enumerate = app.add_subcommand("enumerate", "Weighted pick sequences, one JSON row each");
  add_game_flags(enumerate, inputs, config_path);
  add_common_flags(enumerate, opts);

  auto* verify = app.add_subcommand("verify", "Run every route and compare exactly");
  add_game_flags(verify, inputs, config_path);
  add_common_flags(verify, opts);
  verify->add_option("--corrupt-route", corrupt_route)->group("");  // fault-injection hook

  std::uint64_t trials = 1000000;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  bool compare = false;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate against the exact value");
  add_game_flags(simulate, inputs, config_path);
  add_common_flags(simulate, opts);
  simulate->add_option("--trials", trials, "Trial count")->default_val(1000000ULL);
  simulate->add_option("--seed", seed, "Stream seed")->default_val(0ULL);
  simulate->add_option("--workers", workers, "Worker threads (0 = hardware)")->default_val(0u);
  simulate->add_flag("--compare", compare, "Paired stay-versus-switch run on shared layouts");

  std::string sw_doors = "3", sw_cars = "1", sw_pick = "1", sw_open = "1", sw_q = "1";
  bool csv = false;
  long long max_cells = 100000;
  auto* sweep = app.add_subcommand("sweep", "Stay/switch reports over a parameter grid");
  sweep->add_option("--doors", sw_doors, "Doors, N or LO:HI")->required();
  sweep->add_option("--cars", sw_cars, "Cars, N or LO:HI")->required();
  sweep->add_option("--pick", sw_pick, "Opening picks, N or LO:HI")->required();
  sweep->add_option("--open", sw_open, "Openings, N or LO:HI")->required();
  sweep->add_option("--switch-pick", sw_q, "Later picks, N or LO:HI")->required();
  sweep->add_flag("--csv", csv, "CSV instead of JSON lines");
  sweep->add_option("--max-cells", max_cells, "Grid size cap")->default_val(100000);
  add_common_flags(sweep, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (sweep->parsed()) {
      return run_sweep(sw_doors, sw_cars, sw_pick, sw_open, sw_q, csv, max_cells, opts);
    }

    std::vector<std::string> config_lines;
    if (!config_path.empty()) {
      require_input(inputs.variant.empty() && inputs.game_json.empty(),
                    "--config replaces --variant/--game");
      config_lines = read_config_lines(config_path);
    } else {
      config_lines.emplace_back();  // one run from flags
    }

    int worst = kExitOk;
    for (const std::string& line : config_lines) {
      const GameInputs resolved = resolve_variant(inputs, line);
      const Analysis analysis = build_analysis(resolved, opts.digits);
      int code = kExitOk;
      if (compute->parsed()) {
        code = run_compute_like(analysis, opts, false, "");
      } else if (verify->parsed()) {
        code = run_compute_like(analysis, opts, true, corrupt_route);
      } else if (enumerate->parsed()) {
        code = run_enumerate(analysis, opts);
      } else if (simulate->parsed()) {
        code = run_simulate(analysis, opts, trials, seed, workers, compare);
      }
      worst = std::max(worst, code);
    }
    return worst;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
