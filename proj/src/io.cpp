#include "leftex/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace leftex {

nlohmann::json rule_to_json(const LocalRule& rule) {
  nlohmann::json table = nlohmann::json::object();
  for (std::size_t idx = 0; idx < rule.table_size(); ++idx) {
    table[Word(rule.alphabet(), rule.neighborhood_of(idx)).to_string()] = rule.lookup(idx);
  }
  return {{"alphabet", rule.alphabet().size()}, {"m", rule.memory()}, {"n", rule.anticipation()}, {"table", table}};
}

LocalRule rule_from_json(const nlohmann::json& j) {
  try {
    const Alphabet alphabet(j.at("alphabet").get<int>());
    const int m = j.at("m").get<int>();
    const int n = j.at("n").get<int>();
    std::map<std::vector<Symbol>, Symbol> entries;
    for (const auto& [key, value] : j.at("table").items()) {
      const int out = value.get<int>();
      if (!alphabet.contains(out)) throw Error(ErrorCode::SymbolOutOfRange, "table output " + std::to_string(out));
      entries[parse_word(key, alphabet)] = static_cast<Symbol>(out);
    }
    return make_rule(alphabet, m, n, entries);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("rule JSON: ") + e.what());
  }
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

MulSpec parse_mul_spec(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) throw Error(ErrorCode::Parse, "expected p/q, got '" + std::string(s) + "'");
  return MulSpec{parse_int(s.substr(0, slash), "p"), parse_int(s.substr(slash + 1), "q")};
}

}  // namespace

Automaton parse_rule_argument(std::string_view text) {
  auto starts = [&](std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; };
  if (starts("eca:")) {
    return Automaton(eca_rule(parse_int(text.substr(4), "ECA number")), std::string(text));
  }
  if (starts("mulint:")) return build_mul_rule(parse_mul_spec(text.substr(7)));
  if (starts("mul:")) return build_frac_mul(parse_mul_spec(text.substr(4)));
  if (starts("shift:")) {
    return Automaton(shift_rule(Alphabet(parse_int(text.substr(6), "alphabet size"))), std::string(text));
  }
  if (!text.empty() && text.front() == '{') {
    try {
      return Automaton(rule_from_json(nlohmann::json::parse(text)), "json");
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Parse, std::string("rule JSON: ") + e.what());
    }
  }
  std::ifstream in{std::string(text)};
  if (!in) throw Error(ErrorCode::Io, "cannot open rule file '" + std::string(text) + "'");
  try {
    return Automaton(rule_from_json(nlohmann::json::parse(in)), std::string(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string(text) + ": " + e.what());
  }
}

Configuration parse_configuration_argument(std::string_view text, Alphabet alphabet) {
  if (text.substr(0, 4) == "rat:") return config_n(PositiveRational::parse(text.substr(4)), alphabet.size());
  return parse_configuration(text, alphabet);
}

nlohmann::json to_json(const PropertyVerdict& v) {
  nlohmann::json j{{"property", v.property}, {"status", to_string(v.status)}, {"seeds_checked", v.seeds_checked}};
  j["dims"] = v.dims ? nlohmann::json{v.dims->h, v.dims->d, v.dims->w} : nlohmann::json(nullptr);
  j["seed_space"] = v.seed_space;
  if (v.counterexample) {
    const Counterexample& c = *v.counterexample;
    j["counterexample"] = {{"seed_a", c.seed_a.to_string()},
                           {"seed_b", c.seed_b.to_string()},
                           {"contents", Word(c.seed_a.alphabet(), c.contents).to_string()},
                           {"value_a", c.value_a},
                           {"value_b", c.value_b}};
  }
  if (!v.resource_report.empty()) j["resource_report"] = v.resource_report;
  return j;
}

nlohmann::json to_json(const PeriodCertificate& c) {
  return {{"preperiod", c.preperiod}, {"period", c.period}, {"verified_up_to", c.verified_up_to}};
}

nlohmann::json to_json(const AperiodicityReport& r) {
  nlohmann::json j{{"interval", {r.i, r.j}}, {"horizon", r.horizon}, {"bounds", {r.max_c, r.max_p}}};
  if (r.period) {
    j["outcome"] = "PeriodFound";
    j["certificate"] = to_json(*r.period);
  } else {
    j["outcome"] = "NoPeriodFound";
  }
  return j;
}

nlohmann::json to_json(const RapidClassification& c) {
  nlohmann::json j{{"property", "rapidly_left_expansive"},
                   {"status", to_string(c.verdict)},
                   {"speed_basis", to_string(c.speed_basis)},
                   {"reason", c.reason}};
  j["dims"] = c.dims ? nlohmann::json{c.dims->h, c.dims->d, c.dims->w} : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SpeedEstimate& s) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& v : s.per_sample) per.push_back(v ? nlohmann::json(v->get_str()) : nlohmann::json(nullptr));
  nlohmann::json j{{"samples", s.samples}, {"horizon", s.horizon}, {"per_sample", per}};
  if (s.s_hat) {
    j["s_hat"] = s.s_hat->get_str();
    j["s_hat_decimal"] = s.s_hat->get_d();
  } else {
    j["s_hat"] = nullptr;
  }
  return j;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "n,census\n";
  for (const CensusRow& r : rows) os << r.n << ',' << r.census << '\n';
  return os.str();
}

}  // namespace leftex
