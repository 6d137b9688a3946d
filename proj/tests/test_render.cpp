#include <doctest.h>

#include <functional>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "leftex/io.hpp"
#include "leftex/render.hpp"
#include "oracles.hpp"

using namespace leftex;

namespace {

const Alphabet kBin(2);

Automaton eca(int n) { return Automaton(eca_rule(n), "eca:" + std::to_string(n)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("PBM layout") {
  RenderSpec spec;
  spec.rows = 2;
  spec.col_lo = -2;
  spec.col_hi = 2;
  CHECK(render(eca(30), Configuration::single(kBin, 0), spec) == "P1\n5 2\n0 0 1 0 0\n0 1 1 1 0\n");
  spec.rows = 3;
  CHECK(render(eca(0), Configuration::single(kBin, 0), spec) == "P1\n5 3\n0 0 1 0 0\n0 0 0 0 0\n0 0 0 0 0\n");
}

TEST_CASE("rule 30 raster rows") {
  const auto out = lines(render(eca(30), Configuration::single(kBin, 0), RenderSpec{}));
  REQUIRE(out.size() == 34);
  CHECK(out[0] == "P1");
  CHECK(out[1] == "65 32");
  auto ones = [](const std::string& row) { return std::count(row.begin(), row.end(), '1'); };
  CHECK(ones(out[2]) == 1);
  CHECK(ones(out[3]) == 3);
}

TEST_CASE("golden files") {
  const std::string dir = LEFTEX_GOLDEN_DIR;
  CHECK(render(eca(30), Configuration::single(kBin, 0), RenderSpec{}) == slurp(dir + "/rule30_single1.pbm"));
  CHECK(render(build_frac_mul(MulSpec{3, 2}), config_n(PositiveRational(1, 1), 6), RenderSpec{}) ==
        slurp(dir + "/mul32_config6_1.pbm"));
  // Two runs, same bytes.
  CHECK(render(eca(30), Configuration::single(kBin, 0), RenderSpec{}) ==
        render(eca(30), Configuration::single(kBin, 0), RenderSpec{}));
}

TEST_CASE("Mul_{3/2,6} raster drifts left") {
  RenderSpec spec;
  spec.rows = 64;
  spec.col_lo = -40;
  spec.col_hi = 10;
  const auto out = lines(render(build_frac_mul(MulSpec{3, 2}), config_n(PositiveRational(1, 1), 6), spec));
  const double speed = std::log(1.5) / std::log(6.0);
  for (int t = 0; t < spec.rows; ++t) {
    const std::string& row = out[static_cast<std::size_t>(t + 2)];
    const auto first = row.find('1');
    REQUIRE(first != std::string::npos);
    const Index edge = spec.col_lo + static_cast<Index>(first / 2);
    CHECK(std::abs(static_cast<double>(-edge - 1) - t * speed) <= 2.0);
  }
}

TEST_CASE("PGM and ASCII") {
  CHECK(default_palette(2) == std::vector<int>{255, 0});
  CHECK(default_palette(3) == std::vector<int>{255, 127, 0});
  CHECK(default_palette(6, 255) == std::vector<int>{255, 204, 153, 102, 51, 0});
  RenderSpec spec;
  spec.rows = 2;
  spec.col_lo = -2;
  spec.col_hi = 0;
  spec.format = RenderFormat::Pgm;
  const auto mul = build_frac_mul(MulSpec{3, 2});
  const auto x = config_n(PositiveRational(1, 1), 6);
  CHECK(render(mul, x, spec) == "P2\n3 2\n255\n255 204 255\n255 204 102\n");
  spec.palette = {0, 1, 2, 3, 4, 5};
  spec.maxval = 5;
  CHECK(render(mul, x, spec) == "P2\n3 2\n5\n0 1 0\n0 1 3\n");
  spec.palette = {0, 1, 2};
  CHECK(code_of([&] { render(mul, x, spec); }) == ErrorCode::PaletteIncomplete);
  spec.palette = {0, 1, 2, 3, 4, 9};
  CHECK(code_of([&] { render(mul, x, spec); }) == ErrorCode::InvalidArgument);

  RenderSpec pbm;
  pbm.binarize = false;
  CHECK(code_of([&] { render(mul, x, pbm); }) == ErrorCode::NonBinaryForPBM);
  CHECK_NOTHROW(render(eca(30), Configuration::single(kBin, 0), pbm));

  RenderSpec ascii;
  ascii.format = RenderFormat::Ascii;
  ascii.rows = 2;
  ascii.col_lo = -2;
  ascii.col_hi = 2;
  CHECK(render(eca(30), Configuration::single(kBin, 0), ascii) == "  #  \n ### \n");
  CHECK(render(mul, x, ascii) == " 1   \n 13  \n");

  RenderSpec bad;
  bad.col_lo = 3;
  bad.col_hi = 2;
  CHECK(code_of([&] { render(eca(30), Configuration::single(kBin, 0), bad); }) == ErrorCode::EmptyInterval);
}

TEST_CASE("ECA atlas") {
  const auto rows = eca_atlas();
  REQUIRE(rows.size() == 256);
  int permutive = 0;
  int spreading = 0;
  for (const auto& r : rows) {
    permutive += r.permutive ? 1 : 0;
    spreading += r.spreading ? 1 : 0;
  }
  CHECK(permutive == 16);
  CHECK(spreading == 128);
  const AtlasRow& r30 = rows[30];
  CHECK(r30.permutive);
  CHECK(r30.spreading);
  REQUIRE(r30.dims.has_value());
  CHECK(*r30.dims == ExpansivityDims{0, 1, 2});
  CHECK(r30.rapid == RapidVerdict::Yes);
  CHECK(rows[90].rapid == RapidVerdict::Yes);
  CHECK(rows[204].rapid == RapidVerdict::No);
  CHECK(rows[170].rapid == RapidVerdict::No);
  // Every rapid Yes rests on proved dims.
  for (const auto& r : rows) {
    if (r.rapid == RapidVerdict::Yes) CHECK(r.dims.has_value());
  }
  const std::string csv = atlas_csv(rows);
  CHECK(csv.rfind("rule,left_permutive,spreading_criterion,h,d,w,rapid\n", 0) == 0);
  CHECK(csv.find("\n30,true,true,0,1,2,Yes\n") != std::string::npos);
  CHECK(csv == atlas_csv(eca_atlas()));
  const auto json = nlohmann::json::parse(atlas_json(rows));
  CHECK(json.size() == 256);
  CHECK(json[30]["dims"] == nlohmann::json{0, 1, 2});
}

TEST_CASE("rule JSON") {
  const LocalRule r = eca_rule(110);
  const auto j = rule_to_json(r);
  CHECK(j["alphabet"] == 2);
  CHECK(j["table"]["001"] == 1);
  CHECK(rule_from_json(j) == r);
  auto missing = j;
  missing["table"].erase("001");
  CHECK(code_of([&] { rule_from_json(missing); }) == ErrorCode::IncompleteTable);
  auto bad = j;
  bad["table"]["001"] = 5;
  CHECK(code_of([&] { rule_from_json(bad); }) == ErrorCode::SymbolOutOfRange);
  CHECK(code_of([] { rule_from_json(nlohmann::json{{"alphabet", 2}}); }) == ErrorCode::Parse);

  const LocalRule big = build_mul_rule(MulSpec{5, 3}).rule();
  CHECK(rule_from_json(rule_to_json(big)) == big);

  CHECK(parse_rule_argument("eca:30").rule() == eca_rule(30));
  CHECK(parse_rule_argument("mulint:3/2").rule() == build_mul_rule(MulSpec{3, 2}).rule());
  CHECK(parse_rule_argument("mul:3/2").family()->fractional);
  CHECK(parse_rule_argument("shift:3").rule() == shift_rule(Alphabet(3)));
  CHECK(parse_rule_argument(j.dump()).rule() == r);
  CHECK(code_of([] { parse_rule_argument("eca:x"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rule_argument("mul:3"); }) == ErrorCode::Parse);
  CHECK(code_of([] { parse_rule_argument("/no/such/file.json"); }) == ErrorCode::Io);
  CHECK(code_of([] { parse_rule_argument("{broken"); }) == ErrorCode::Parse);
  CHECK(parse_configuration_argument("rat:3/2", Alphabet(6)) == config_n(PositiveRational(3, 2), 6));
}
