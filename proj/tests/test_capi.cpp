#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "leftex/leftex.h"

namespace {

// Owns a char* returned by the library.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  leftex_string_free(s);
  return out;
}

leftex_rule* rule(const char* text) {
  leftex_rule* r = nullptr;
  REQUIRE(leftex_rule_parse(text, &r) == LEFTEX_OK);
  REQUIRE(r != nullptr);
  return r;
}

leftex_config* config(const char* text, int alphabet) {
  leftex_config* x = nullptr;
  REQUIRE(leftex_config_parse(text, alphabet, &x) == LEFTEX_OK);
  return x;
}

}  // namespace

TEST_CASE("status names and last error") {
  CHECK(std::string(leftex_status_name(LEFTEX_OK)) == "OK");
  CHECK(std::string(leftex_status_name(LEFTEX_E_PARSE)) == "Parse");
  CHECK(std::string(leftex_status_name(LEFTEX_E_INTERNAL)) == "Internal");
  leftex_rule* r = nullptr;
  CHECK(leftex_rule_parse("eca:300", &r) == LEFTEX_E_OUT_OF_RANGE);
  CHECK(r == nullptr);
  CHECK(std::string(leftex_last_error()).find("300") != std::string::npos);
  CHECK(leftex_rule_parse("mul:3", &r) == LEFTEX_E_PARSE);
  CHECK(leftex_rule_parse("/no/such/rule.json", &r) == LEFTEX_E_IO);
  CHECK(leftex_rule_parse(nullptr, &r) == LEFTEX_E_INVALID_ARGUMENT);
  CHECK(leftex_rule_parse("eca:30", nullptr) == LEFTEX_E_INVALID_ARGUMENT);
  leftex_rule_free(nullptr);
  leftex_config_free(nullptr);
  leftex_string_free(nullptr);
}

TEST_CASE("rules and configurations") {
  leftex_rule* r30 = rule("eca:30");
  CHECK(leftex_rule_alphabet(r30) == 2);
  char* js = nullptr;
  REQUIRE(leftex_rule_to_json(r30, &js) == LEFTEX_OK);
  const auto j = nlohmann::json::parse(take(js));
  CHECK(j["table"]["001"] == 1);
  CHECK(j["table"]["111"] == 0);

  leftex_config* x = config("[L:0] 1 [R:0] @0", 2);
  char* s = nullptr;
  REQUIRE(leftex_config_to_string(x, &s) == LEFTEX_OK);
  CHECK(take(s) == "[L:0] 1 [R:0] @0");

  leftex_config* y = nullptr;
  REQUIRE(leftex_apply(r30, x, &y) == LEFTEX_OK);
  REQUIRE(leftex_config_window(y, -2, 2, &s) == LEFTEX_OK);
  CHECK(take(s) == "01110");
  int64_t edge = 0;
  REQUIRE(leftex_config_left_edge(y, &edge) == LEFTEX_OK);
  CHECK(edge == -1);

  leftex_config* z = nullptr;
  REQUIRE(leftex_iterate(r30, x, 2, &z) == LEFTEX_OK);
  REQUIRE(leftex_config_window(z, -2, 2, &s) == LEFTEX_OK);
  CHECK(take(s) == "11001");
  REQUIRE(leftex_simulate(r30, x, 2, &s) == LEFTEX_OK);
  const std::string sim = take(s);
  CHECK(std::count(sim.begin(), sim.end(), '\n') == 3);

  leftex_config* bad = nullptr;
  CHECK(leftex_config_parse("[L:0] 2 [R:0] @0", 2, &bad) == LEFTEX_E_PARSE);
  CHECK(bad == nullptr);
  leftex_config* tri = config("[L:0] 2 [R:0] @0", 3);
  CHECK(leftex_apply(r30, tri, &bad) == LEFTEX_E_ALPHABET_MISMATCH);
  CHECK(leftex_config_window(x, 3, 2, &s) == LEFTEX_E_EMPTY_INTERVAL);

  leftex_rule* sigma = rule("shift:2");
  leftex_rule* composed = nullptr;
  REQUIRE(leftex_rule_compose(r30, sigma, &composed) == LEFTEX_OK);
  leftex_rule* mul = rule("mul:3/2");
  CHECK(leftex_rule_compose(r30, mul, &composed) == LEFTEX_E_ALPHABET_MISMATCH);

  for (auto* c : {x, y, z, tri}) leftex_config_free(c);
  for (auto* r : {r30, sigma, composed, mul}) leftex_rule_free(r);
}

TEST_CASE("numeric bridge") {
  leftex_config* x = nullptr;
  REQUIRE(leftex_config_from_rational("3/2", 6, &x) == LEFTEX_OK);
  char* s = nullptr;
  REQUIRE(leftex_config_real(x, &s) == LEFTEX_OK);
  CHECK(take(s) == "3/2");
  leftex_rule* mul = rule("mul:3/2");
  leftex_config* y = nullptr;
  REQUIRE(leftex_apply(mul, x, &y) == LEFTEX_OK);
  REQUIRE(leftex_config_real(y, &s) == LEFTEX_OK);
  CHECK(take(s) == "9/4");
  leftex_config* none = nullptr;
  CHECK(leftex_config_from_rational("0", 6, &none) == LEFTEX_E_NOT_POSITIVE);
  CHECK(leftex_config_from_rational("1/2", 1, &none) == LEFTEX_E_BAD_BASE);
  leftex_config* zero = config("[L:0] [R:0] @0", 6);
  CHECK(leftex_config_real(zero, &s) == LEFTEX_E_NOT_NUMBER_LIKE);

  leftex_verdict v = LEFTEX_UNKNOWN;
  REQUIRE(leftex_verify_mul(3, 2, "7/5", 8, &v) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);
  CHECK(leftex_verify_mul(2, 3, "1", 8, &v) == LEFTEX_E_BAD_SPEC);
  for (auto* c : {x, y, zero}) leftex_config_free(c);
  leftex_rule_free(mul);
}

TEST_CASE("deciders") {
  leftex_limits limits{0, 2};
  leftex_rule* r30 = rule("eca:30");
  leftex_rule* r0 = rule("eca:0");
  leftex_rule* mul = rule("mul:3/2");
  leftex_verdict v = LEFTEX_UNKNOWN;
  char* js = nullptr;

  REQUIRE(leftex_left_permutive(r30, 1, 1, &v) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);
  REQUIRE(leftex_left_permutive(r0, 1, 1, &v) == LEFTEX_OK);
  CHECK(v == LEFTEX_FALSE);

  REQUIRE(leftex_expansive(r30, 0, 1, 2, &limits, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);
  CHECK(nlohmann::json::parse(take(js))["seed_space"] == 32);
  REQUIRE(leftex_expansive(r0, 0, 1, 2, &limits, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_FALSE);
  CHECK(nlohmann::json::parse(take(js)).contains("counterexample"));
  leftex_limits tiny{10, 1};
  REQUIRE(leftex_expansive(mul, 1, 1, 1, &tiny, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_UNKNOWN);
  leftex_string_free(js);
  CHECK(leftex_expansive(r30, 0, 0, 0, &limits, &v, &js) == LEFTEX_E_BAD_DIMS);
  // NULL limits means defaults.
  REQUIRE(leftex_expansive(r30, 0, 1, 2, nullptr, &v, nullptr) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);

  REQUIRE(leftex_find_dims(r30, 2, 2, 4, &limits, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);
  CHECK(nlohmann::json::parse(take(js))["dims"] == nlohmann::json{0, 1, 2});

  REQUIRE(leftex_classify(mul, 2, 2, 4, &limits, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);
  leftex_string_free(js);
  leftex_rule* sigma = rule("shift:2");
  REQUIRE(leftex_classify(sigma, 2, 2, 4, &limits, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_FALSE);
  leftex_string_free(js);

  leftex_config* one = nullptr;
  REQUIRE(leftex_config_from_rational("1", 6, &one) == LEFTEX_OK);
  const leftex_config* samples[] = {one};
  REQUIRE(leftex_speed(mul, samples, 1, 200, &js) == LEFTEX_OK);
  const auto sp = nlohmann::json::parse(take(js));
  CHECK(sp["s_hat_decimal"].get<double>() < 0.5);
  CHECK(leftex_speed(mul, samples, 0, 200, &js) == LEFTEX_E_INVALID_ARGUMENT);

  leftex_config_free(one);
  for (auto* r : {r30, r0, mul, sigma}) leftex_rule_free(r);
}

TEST_CASE("dynamics") {
  leftex_rule* r90 = rule("eca:90");
  leftex_rule* mul = rule("mul:3/2");
  leftex_rule* id = rule("eca:204");
  leftex_config* single = config("[L:0] 1 [R:0] @0", 2);
  leftex_verdict v = LEFTEX_UNKNOWN;
  char* js = nullptr;

  REQUIRE(leftex_scan_period(r90, single, 0, 0, 256, 100, 100, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);
  const auto scan = nlohmann::json::parse(take(js));
  CHECK(scan["certificate"]["preperiod"] == 1);
  CHECK(scan["certificate"]["period"] == 1);

  uint64_t cx[3] = {0, 0, 0};
  REQUIRE(leftex_trace_complexity(r90, single, 0, 0, 64, 3, cx) == LEFTEX_OK);
  CHECK(cx[0] == 2);
  CHECK(leftex_trace_complexity(r90, single, 0, 0, 2, 3, cx) == LEFTEX_E_PREFIX_TOO_SHORT);

  leftex_config* one = nullptr;
  REQUIRE(leftex_config_from_rational("1", 6, &one) == LEFTEX_OK);
  REQUIRE(leftex_recur(mul, one, 0, 60, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);
  leftex_string_free(js);
  REQUIRE(leftex_recur(id, single, 0, 5, &v, &js) == LEFTEX_OK);
  CHECK(v == LEFTEX_FALSE);
  CHECK(nlohmann::json::parse(take(js))["hits"] == nlohmann::json{1, 2, 3, 4, 5});

  const int lengths[] = {1, 2, 3};
  char* out = nullptr;
  REQUIRE(leftex_limits_census(id, single, 0, 20, lengths, 3, 1, &out) == LEFTEX_OK);
  CHECK(nlohmann::json::parse(take(out))["monotone"] == true);
  REQUIRE(leftex_limits_census(id, single, 0, 20, lengths, 3, 0, &out) == LEFTEX_OK);
  CHECK(take(out).rfind("n,census\n", 0) == 0);

  leftex_rule* sigma = rule("shift:2");
  leftex_config* ep = config("[L:0] 1 [R:011] @0", 2);
  REQUIRE(leftex_propagation(sigma, 1, 0, 1, ep, 2, 0, 3, 40, nullptr, &v) == LEFTEX_OK);
  CHECK(v == LEFTEX_TRUE);
  CHECK(leftex_propagation(sigma, 1, 0, 1, ep, 2, 0, 3, 4, nullptr, &v) == LEFTEX_E_INSUFFICIENT_HORIZON);

  REQUIRE(leftex_repetition_n(2, 1, 2, 0, 1, &out) == LEFTEX_OK);
  CHECK(take(out) == "4");

  leftex_config_free(single);
  leftex_config_free(one);
  leftex_config_free(ep);
  for (auto* r : {r90, mul, id, sigma}) leftex_rule_free(r);
}

TEST_CASE("render") {
  leftex_rule* r30 = rule("eca:30");
  leftex_config* x = config("[L:0] 1 [R:0] @0", 2);
  leftex_render_options opt{2, -2, 2, LEFTEX_PBM, 0, nullptr, 0, 1};
  char* out = nullptr;
  REQUIRE(leftex_render(r30, x, &opt, &out) == LEFTEX_OK);
  CHECK(take(out) == "P1\n5 2\n0 0 1 0 0\n0 1 1 1 0\n");
  opt.format = LEFTEX_ASCII;
  REQUIRE(leftex_render(r30, x, &opt, &out) == LEFTEX_OK);
  CHECK(take(out) == "  #  \n ### \n");

  opt.format = LEFTEX_PBM;
  const std::string path = "capi_render_test.pbm";
  REQUIRE(leftex_render_file(r30, x, &opt, path.c_str()) == LEFTEX_OK);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "P1\n5 2\n0 0 1 0 0\n0 1 1 1 0\n");
  std::remove(path.c_str());
  CHECK(leftex_render_file(r30, x, &opt, "/no/such/dir/out.pbm") == LEFTEX_E_IO);

  opt.col_lo = 3;
  CHECK(leftex_render(r30, x, &opt, &out) == LEFTEX_E_EMPTY_INTERVAL);

  leftex_rule* mul = rule("mul:3/2");
  leftex_config* m = nullptr;
  REQUIRE(leftex_config_from_rational("1", 6, &m) == LEFTEX_OK);
  const int pal[] = {0, 1, 2};
  leftex_render_options pgm{2, -2, 0, LEFTEX_PGM, 5, pal, 3, 0};
  CHECK(leftex_render(mul, m, &pgm, &out) == LEFTEX_E_PALETTE_INCOMPLETE);
  leftex_render_options raw{2, -2, 0, LEFTEX_PBM, 0, nullptr, 0, 0};
  CHECK(leftex_render(mul, m, &raw, &out) == LEFTEX_E_NON_BINARY_FOR_PBM);

  char* csv = nullptr;
  REQUIRE(leftex_atlas(nullptr, 0, &csv) == LEFTEX_OK);
  CHECK(take(csv).find("\n30,true,true,0,1,2,Yes\n") != std::string::npos);

  leftex_config_free(x);
  leftex_config_free(m);
  leftex_rule_free(r30);
  leftex_rule_free(mul);
}
