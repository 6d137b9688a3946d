#ifndef LEFTEX_IO_HPP
#define LEFTEX_IO_HPP

#include <json.hpp>
#include <string>
#include <string_view>

#include "leftex/automaton.hpp"
#include "leftex/deciders.hpp"
#include "leftex/dynamics.hpp"
#include "leftex/numeric.hpp"

namespace leftex {

/// `{ "alphabet": n, "m": m, "n": n, "table": { "<neighborhood>": symbol, ... } }`
nlohmann::json rule_to_json(const LocalRule& rule);
/// Throws Parse, IncompleteTable, SymbolOutOfRange.
LocalRule rule_from_json(const nlohmann::json& j);

/// `eca:N`, `mul:p/q` (Mul_{p/q,pq}), `mulint:p/q` (Mul_{p,pq}), `shift:n`
/// (sigma over n symbols), inline JSON, or a path to a JSON rule file.
Automaton parse_rule_argument(std::string_view text);

/// A configuration literal, or `rat:NUM/DEN` for config_n over the rule's alphabet.
Configuration parse_configuration_argument(std::string_view text, Alphabet alphabet);

nlohmann::json to_json(const PropertyVerdict& v);
nlohmann::json to_json(const PeriodCertificate& c);
nlohmann::json to_json(const AperiodicityReport& r);
nlohmann::json to_json(const RapidClassification& c);
nlohmann::json to_json(const SpeedEstimate& s);

/// Columns: n, census.
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace leftex

#endif  // LEFTEX_IO_HPP
