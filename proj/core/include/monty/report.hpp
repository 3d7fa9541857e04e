#pragma once

#include "monty/closedform.hpp"
#include "monty/rational.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace monty::report {

// Insertion-ordered JSON keeps every emission byte-stable for identical
// inputs, which the output contract depends on.
using ordered_json = nlohmann::ordered_json;

// Every probability in an envelope is this triple: the fraction in the
// shape its route produced it (possibly unreduced), the canonical reduced
// form routes are compared by, and a fixed-point decimal for reading.
ordered_json value_json(const ExactValue& v, int digits);
ordered_json value_json(const Rational& v, int digits);

// A machine-readable note: a figure in the published treatment of these
// games that exact recomputation contradicts. `text()` renders the stable
// "<id>: <note>" string envelopes carry.
struct Erratum {
  std::string id;
  std::string note;
  std::string text() const { return id + ": " + note; }
};

// The registry. Each note is attached whenever the computation it concerns
// is requested.
Erratum erratum_anterior_stay();            // stay ≈ 7/24 → exactly 37/44
Erratum erratum_all_cars_denominator();     // misprinted later-round block
Erratum erratum_with_replacement();         // 11/36 family counted picks with replacement
Erratum erratum_multi_switch_goat_term();   // wrong opening count in one printed term
Erratum erratum_max_opening_factor();       // 12,345,678 "exact" factor claim

std::vector<Erratum> all_errata();

// True when every route produced the same reduced value.
bool routes_agree(const std::vector<Rational>& values);

// Assembles the five-field envelope. `errata` may be empty.
ordered_json make_envelope(const std::string& variant, ordered_json params,
                           ordered_json results, bool agreement,
                           const std::vector<Erratum>& errata);

// Structural validation against the published envelope shape
// (docs/envelope.schema.json). Returns human-readable problems; empty means
// valid.
std::vector<std::string> validate_envelope(const nlohmann::json& envelope);

}  // namespace monty::report
