#include "monty/report.hpp"

#include <regex>

namespace monty::report {

ordered_json value_json(const ExactValue& v, int digits) {
  return ordered_json{{"fraction", v.display()},
                      {"reduced", v.value().to_string()},
                      {"decimal", v.value().to_decimal(digits)}};
}

ordered_json value_json(const Rational& v, int digits) {
  return ordered_json{{"fraction", v.to_string()},
                      {"reduced", v.to_string()},
                      {"decimal", v.to_decimal(digits)}};
}

Erratum erratum_anterior_stay() {
  return {"anterior-stay-miscount",
          "the published stay probability for at least one car in three picks from twelve "
          "doors is 7/24 via the product 7*6*5/(12*11*10); that product is 7/44, so staying "
          "wins with probability 37/44 (about 0.8409), which exceeds the switch value "
          "45000/55440 (about 0.8117) — switching lowers this probability"};
}

Erratum erratum_all_cars_denominator() {
  return {"all-cars-denominator-misprint",
          "the published all-cars closed form prints its later-round denominator block from "
          "(doors-opened)!; the availability chain requires (doors-picks-opened)! over "
          "(doors-picks-opened-later-picks)!, and exhaustive enumeration confirms the "
          "corrected block"};
}

Erratum erratum_with_replacement() {
  return {"with-replacement-anterior",
          "the published values for two picks from six doors with one car — stay 11/36 and "
          "switch 25/36, 25/72, 25/108 — count the two opening picks with replacement; "
          "picked doors never repeat, so the exact values are stay 1/3 and switch 2/3, 1/3, "
          "2/9 for three, two, and one openings"};
}

Erratum erratum_multi_switch_goat_term() {
  return {"multi-switch-goat-term",
          "one numerator term of the published two-round sequence table subtracts the "
          "second round's openings where availability subtracts the first round's; with a "
          "single car every affected product vanishes, so the published 10/18 total is "
          "unaffected"};
}

Erratum erratum_max_opening_factor() {
  return {"max-opening-factor",
          "with 123456789 doors, 12345678 cars, and 111111110 openings the published "
          "improvement factor is 12345678 exactly; the factor is "
          "123456788/12345678 = 61728394/6172839 (about 10.0000006) — the published figure "
          "is the fraction's denominator, and no opening schedule can improve a stay chance "
          "of about 0.1 by more than a factor of about 10"};
}

std::vector<Erratum> all_errata() {
  return {erratum_anterior_stay(), erratum_all_cars_denominator(), erratum_with_replacement(),
          erratum_multi_switch_goat_term(), erratum_max_opening_factor()};
}

bool routes_agree(const std::vector<Rational>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] != values[0]) return false;
  }
  return true;
}

ordered_json make_envelope(const std::string& variant, ordered_json params,
                           ordered_json results, bool agreement,
                           const std::vector<Erratum>& errata) {
  ordered_json notes = ordered_json::array();
  for (const Erratum& e : errata) notes.push_back(e.text());
  return ordered_json{{"variant", variant},
                      {"params", std::move(params)},
                      {"results", std::move(results)},
                      {"agreement", agreement},
                      {"errata_notes", std::move(notes)}};
}

namespace {

const std::regex kFraction(R"(^-?\d+/\d+$)");
const std::regex kDecimal(R"(^-?\d+(\.\d+)?$)");
const std::regex kErratum(R"(^[a-z0-9][a-z0-9-]*: .+$)");

void check_value_objects(const nlohmann::json& node, const std::string& path,
                         std::vector<std::string>& problems) {
  if (node.is_object()) {
    if (node.contains("fraction") || node.contains("reduced")) {
      for (const char* key : {"fraction", "reduced", "decimal"}) {
        if (!node.contains(key) || !node.at(key).is_string()) {
          problems.push_back(path + ": value object lacks string \"" + key + "\"");
          continue;
        }
        const auto& text = node.at(key).get_ref<const std::string&>();
        const std::regex& pattern = std::string(key) == "decimal" ? kDecimal : kFraction;
        if (!std::regex_match(text, pattern)) {
          problems.push_back(path + "." + key + ": malformed \"" + text + "\"");
        }
      }
      return;
    }
    for (const auto& [key, child] : node.items()) {
      check_value_objects(child, path + "." + key, problems);
    }
  } else if (node.is_array()) {
    std::size_t i = 0;
    for (const auto& child : node) {
      check_value_objects(child, path + "[" + std::to_string(i++) + "]", problems);
    }
  }
}

}  // namespace

std::vector<std::string> validate_envelope(const nlohmann::json& envelope) {
  std::vector<std::string> problems;
  if (!envelope.is_object()) {
    problems.emplace_back("envelope: not a JSON object");
    return problems;
  }
  const char* required[] = {"variant", "params", "results", "agreement", "errata_notes"};
  for (const char* key : required) {
    if (!envelope.contains(key)) problems.push_back(std::string("envelope: missing \"") + key + "\"");
  }
  for (const auto& [key, value] : envelope.items()) {
    (void)value;
    bool known = false;
    for (const char* k : required) known = known || key == k;
    if (!known) problems.push_back("envelope: unexpected key \"" + key + "\"");
  }
  if (!problems.empty()) return problems;

  if (!envelope.at("variant").is_string()) problems.emplace_back("variant: not a string");
  if (!envelope.at("params").is_object()) problems.emplace_back("params: not an object");
  if (!envelope.at("results").is_object()) problems.emplace_back("results: not an object");
  if (!envelope.at("agreement").is_boolean()) problems.emplace_back("agreement: not a boolean");
  const auto& notes = envelope.at("errata_notes");
  if (!notes.is_array()) {
    problems.emplace_back("errata_notes: not an array");
  } else {
    std::size_t i = 0;
    for (const auto& note : notes) {
      if (!note.is_string() || !std::regex_match(note.get_ref<const std::string&>(), kErratum)) {
        problems.push_back("errata_notes[" + std::to_string(i) + "]: not \"<id>: <note>\"");
      }
      ++i;
    }
  }
  if (!problems.empty()) return problems;

  check_value_objects(envelope.at("results"), "results", problems);
  return problems;
}

}  // namespace monty::report
