#include <doctest.h>

#include <functional>
#include <cmath>

#include "leftex/deciders.hpp"
#include "leftex/numeric.hpp"
#include "oracles.hpp"

using namespace leftex;

namespace {

const Alphabet kBin(2);

Automaton eca(int n) { return Automaton(eca_rule(n), "eca:" + std::to_string(n)); }
Automaton sigma() { return Automaton(shift_rule(kBin), "shift"); }
Automaton mul32() { return build_frac_mul(MulSpec{3, 2}); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

void check_replay(const Automaton& f, const ExpansivityDims& dims, const PropertyVerdict& v) {
  REQUIRE(v.status == VerdictStatus::False);
  REQUIRE(v.counterexample.has_value());
  const Counterexample& c = *v.counterexample;
  const RectangleReading a = read_rectangle(f, dims, c.seed_a);
  const RectangleReading b = read_rectangle(f, dims, c.seed_b);
  CHECK(a.contents == b.contents);
  CHECK(a.contents == c.contents);
  CHECK(a.determined == c.value_a);
  CHECK(b.determined == c.value_b);
  CHECK(a.determined != b.determined);
  CHECK(c.seed_a < c.seed_b);
}

}  // namespace

TEST_CASE("left permutivity") {
  CHECK(is_left_permutive(eca_rule(30), 1, 1));
  CHECK(is_left_permutive(eca_rule(90), 1, 1));
  CHECK_FALSE(is_left_permutive(eca_rule(0), 1, 1));
  CHECK(code_of([] { is_left_permutive(eca_rule(30), 0, 1); }) == ErrorCode::BadDims);
  CHECK(code_of([] { is_left_permutive(eca_rule(30), 1, 0); }) == ErrorCode::IncompatibleRule);
  // sigma^-1 re-expressed as (1,1) is left permutive; sigma is not.
  CHECK(is_left_permutive(inverse_shift_rule(kBin), 1, 1));
  CHECK_FALSE(is_left_permutive(shift_rule(kBin), 1, 1));
  CHECK(is_left_permutive(mul32().rule(), 1, 1) == oracle::brute_left_permutive(mul32().rule()));
}

TEST_CASE("ECA census") {
  int permutive = 0;
  int spreading = 0;
  for (int n = 0; n < 256; ++n) {
    const LocalRule r = eca_rule(n);
    const bool p = is_left_permutive(r, 1, 1);
    REQUIRE(p == oracle::brute_left_permutive(r));
    permutive += p ? 1 : 0;
    const bool s = is_left_spreading_eca(r);
    REQUIRE(s == (oracle::eca(n, 0, 0, 1) == 1));
    spreading += s ? 1 : 0;
  }
  CHECK(permutive == 16);
  CHECK(spreading == 128);
}

TEST_CASE("left expansivity anchors") {
  const auto s = is_left_expansive(sigma(), {1, 0, 1});
  CHECK(s.status == VerdictStatus::True);
  CHECK(s.seeds_checked == s.seed_space);
  CHECK(s.seed_space > 0);
  CHECK(is_left_expansive(eca(30), {0, 1, 2}).status == VerdictStatus::True);
  CHECK(is_left_expansive(eca(90), {0, 1, 2}).status == VerdictStatus::True);
  CHECK(is_left_expansive(mul32(), {1, 1, 1}).status == VerdictStatus::True);
  const auto z = is_left_expansive(eca(0), {0, 1, 2});
  check_replay(eca(0), {0, 1, 2}, z);
  // sigma determines nothing from the row it shares with the cell.
  check_replay(sigma(), {0, 0, 1}, is_left_expansive(sigma(), {0, 0, 1}));
}

TEST_CASE("Mul_{3/2,6} needs the full (1,1,1) rectangle") {
  CHECK(is_left_expansive(mul32(), {0, 0, 1}).status == VerdictStatus::False);
  CHECK(is_left_expansive(mul32(), {1, 0, 1}).status == VerdictStatus::False);
  CHECK(is_left_expansive(mul32(), {0, 1, 1}).status == VerdictStatus::False);
  const auto s = find_left_expansive_dims(mul32(), 1, 1, 1);
  REQUIRE(s.dims.has_value());
  CHECK(*s.dims == ExpansivityDims{1, 1, 1});
}

TEST_CASE("seed length and verdict JSON fields") {
  CHECK(expansivity_seed_length(eca_rule(30), {0, 1, 2}) == 5);
  CHECK(expansivity_seed_length(shift_rule(kBin), {1, 0, 1}) == 3);
  const auto v = is_left_expansive(eca(30), {0, 1, 2});
  CHECK(v.property == "left_expansive");
  CHECK(v.seed_space == 32);
  CHECK(v.seeds_checked == 32);
  REQUIRE(v.dims.has_value());
  CHECK(*v.dims == ExpansivityDims{0, 1, 2});
}

TEST_CASE("decider agrees with a radius-form brute force") {
  for (int n = 0; n < 256; ++n) {
    const Automaton f = eca(n);
    for (const ExpansivityDims d :
         {ExpansivityDims{0, 0, 1}, ExpansivityDims{0, 1, 2}, ExpansivityDims{1, 0, 1}, ExpansivityDims{1, 1, 1},
          ExpansivityDims{0, 1, 1}, ExpansivityDims{1, 0, 2}}) {
      const auto expect = oracle::brute_left_expansive(f.rule(), d.h, d.d, d.w);
      REQUIRE(expect.has_value());
      const auto v = is_left_expansive(f, d);
      REQUIRE(v.status == (*expect ? VerdictStatus::True : VerdictStatus::False));
      if (v.status == VerdictStatus::False) check_replay(f, d, v);
    }
  }
  oracle::Gen g(41);
  for (int k = 0; k < 60; ++k) {
    const int m = g.uniform(0, 1);
    const int n = g.uniform(0, 1);
    const Automaton f(g.rule(3, m, n));
    const ExpansivityDims d{g.uniform(0, 1), g.uniform(0, 1), g.uniform(1, 2)};
    const auto expect = oracle::brute_left_expansive(f.rule(), d.h, d.d, d.w);
    if (!expect) continue;
    REQUIRE(is_left_expansive(f, d).status == (*expect ? VerdictStatus::True : VerdictStatus::False));
  }
}

TEST_CASE("permutive rules are expansive with dims (0,1,m+n)") {
  for (int n = 0; n < 256; ++n) {
    if (!is_left_permutive(eca_rule(n), 1, 1)) continue;
    CHECK(is_left_expansive(eca(n), {0, 1, 2}).status == VerdictStatus::True);
  }
  oracle::Gen g(42);
  for (int k = 0; k < 50; ++k) {
    const int m = g.uniform(1, 2);
    const int n = g.uniform(0, 1);
    const LocalRule r = g.left_permutive_rule(3, m, n);
    REQUIRE(is_left_permutive(r, m, n));
    REQUIRE(is_left_expansive(Automaton(r), {0, 1, m + n}).status == VerdictStatus::True);
  }
}

TEST_CASE("monotonicity in the rectangle") {
  oracle::Gen g(43);
  int checked = 0;
  for (int k = 0; checked < 20 && k < 4000; ++k) {
    const Automaton f = (k % 2 == 0) ? eca(g.uniform(0, 255)) : Automaton(g.rule(3, g.uniform(0, 1), 1));
    const ExpansivityDims d{g.uniform(0, 1), g.uniform(0, 1), g.uniform(1, 2)};
    if (is_left_expansive(f, d).status != VerdictStatus::True) continue;
    ++checked;
    CHECK(is_left_expansive(f, {d.h, d.d, d.w + 1}).status == VerdictStatus::True);
    CHECK(is_left_expansive(f, {d.h + 1, d.d, d.w}).status == VerdictStatus::True);
    CHECK(is_left_expansive(f, {d.h, d.d + 1, d.w}).status == VerdictStatus::True);
  }
  CHECK(checked == 20);
}

TEST_CASE("budget and partitioning") {
  const auto v = is_left_expansive(mul32(), {1, 1, 1}, DeciderLimits{100, 1});
  CHECK(v.status == VerdictStatus::Unknown);
  CHECK(v.resource_report.find("ResourceExceeded") != std::string::npos);
  CHECK(v.seeds_checked == 0);

  for (int n : {0, 30, 110, 54, 150}) {
    for (const ExpansivityDims d : {ExpansivityDims{0, 1, 2}, ExpansivityDims{1, 1, 1}, ExpansivityDims{0, 0, 1}}) {
      const auto one = is_left_expansive(eca(n), d, DeciderLimits{kDefaultBudget, 1});
      const auto many = is_left_expansive(eca(n), d, DeciderLimits{kDefaultBudget, 4});
      REQUIRE(one.status == many.status);
      REQUIRE(one.seeds_checked == many.seeds_checked);
      REQUIRE(one.counterexample.has_value() == many.counterexample.has_value());
      if (one.counterexample) {
        CHECK(one.counterexample->seed_a == many.counterexample->seed_a);
        CHECK(one.counterexample->seed_b == many.counterexample->seed_b);
      }
    }
  }
  CHECK(code_of([] { is_left_expansive(eca(30), {0, 0, 0}); }) == ErrorCode::BadDims);
  CHECK(code_of([] { is_left_expansive(eca(30), {-1, 0, 1}); }) == ErrorCode::BadDims);
}

TEST_CASE("dims search") {
  const auto r30 = find_left_expansive_dims(eca(30), 2, 2, 4);
  REQUIRE(r30.dims.has_value());
  CHECK(*r30.dims == ExpansivityDims{0, 1, 2});
  // Rule 0 only fails when the determined cell sits in the free top row.
  const auto r0 = find_left_expansive_dims(eca(0), 0, 2, 3);
  CHECK_FALSE(r0.dims.has_value());
  CHECK_FALSE(r0.budget_exhausted);
  const auto r0h = find_left_expansive_dims(eca(0), 2, 2, 3);
  REQUIRE(r0h.dims.has_value());
  CHECK(*r0h.dims == ExpansivityDims{1, 0, 1});
  const auto s = find_left_expansive_dims(sigma(), 2, 2, 2);
  REQUIRE(s.dims.has_value());
  CHECK(*s.dims == ExpansivityDims{1, 0, 1});
}

TEST_CASE("ECA spreading criterion") {
  CHECK(is_left_spreading_eca(eca_rule(30)));
  CHECK(is_left_spreading_eca(eca_rule(90)));
  CHECK_FALSE(is_left_spreading_eca(eca_rule(0)));
  CHECK(is_eca(shift_rule(kBin)));
  CHECK_FALSE(is_eca(mul32().rule()));
  CHECK(code_of([] { is_left_spreading_eca(mul32().rule()); }) == ErrorCode::NotECA);
}

TEST_CASE("empirical left spreading") {
  const auto m = empirical_left_spreading(mul32(), {config_n(PositiveRational(1, 1), 6)}, 20);
  REQUIRE(m.witness[0].has_value());
  // (3/2)^t first reaches 6 at t = 5.
  CHECK(*m.witness[0] == 5);
  const auto r = empirical_left_spreading(eca(30), {Configuration::single(kBin, 0)}, 5);
  REQUIRE(r.witness[0].has_value());
  CHECK(*r.witness[0] == 1);
  oracle::Gen g(44);
  std::vector<Configuration> xs;
  for (int k = 0; k < 10; ++k) xs.push_back(g.number_like(2));
  const auto id = empirical_left_spreading(eca(204), xs, 50);
  CHECK_FALSE(id.all_witnessed());
  for (const auto& w : id.witness) CHECK_FALSE(w.has_value());
  CHECK(code_of([] { empirical_left_spreading(eca(1), {Configuration::single(kBin, 0)}, 5); }) ==
        ErrorCode::ZeroNotQuiescent);
  CHECK(code_of([] { empirical_left_spreading(eca(30), {Configuration::zero(kBin)}, 5); }) ==
        ErrorCode::NotNumberLike);
}

TEST_CASE("spreading speed") {
  const auto r30 = estimate_spreading_speed(eca(30), {Configuration::single(kBin, 0)}, 200);
  REQUIRE(r30.s_hat.has_value());
  CHECK(*r30.s_hat == 1);
  const auto s = estimate_spreading_speed(sigma(), {Configuration::single(kBin, 0)}, 100);
  REQUIRE(s.s_hat.has_value());
  CHECK(*s.s_hat == 1);

  const int T = 400;
  const auto m = estimate_spreading_speed(mul32(), {config_n(PositiveRational(1, 1), 6)}, T);
  REQUIRE(m.s_hat.has_value());
  // Exact oracle: left edge of (3/2)^t is minus its count of base-6 integer digits.
  mpq_class best(0);
  mpq_class v(1);
  for (int t = 1; t <= T; ++t) {
    v *= mpq_class(3, 2);
    if (2 * t < T) continue;
    mpq_class ratio(oracle::integer_digits(v, 6) - 1, t);
    ratio.canonicalize();
    if (ratio > best) best = ratio;
  }
  CHECK(*m.s_hat == best);
  CHECK(std::abs(m.s_hat->get_d() - std::log(1.5) / std::log(6.0)) < 0.01);

  CHECK(code_of([] { estimate_spreading_speed(eca(30), {}, 10); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { estimate_spreading_speed(eca(30), {Configuration::single(kBin, 0)}, 0); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { estimate_spreading_speed(eca(1), {Configuration::single(kBin, 0)}, 10); }) ==
        ErrorCode::ZeroNotQuiescent);
}

TEST_CASE("rapid classification") {
  const auto r30 = classify_rapid(eca(30));
  CHECK(r30.verdict == RapidVerdict::Yes);
  REQUIRE(r30.dims.has_value());
  CHECK(*r30.dims == ExpansivityDims{0, 1, 2});
  CHECK(r30.speed_basis == SpeedBasis::ExactFamily);

  const auto m = classify_rapid(mul32());
  CHECK(m.verdict == RapidVerdict::Yes);
  REQUIRE(m.dims.has_value());
  CHECK(*m.dims == ExpansivityDims{1, 1, 1});
  CHECK(m.speed_basis == SpeedBasis::ExactFamily);

  CHECK(classify_rapid(sigma()).verdict == RapidVerdict::No);
  CHECK(classify_rapid(eca(204)).verdict == RapidVerdict::No);
  CHECK(classify_rapid(eca(1)).verdict == RapidVerdict::No);
  CHECK(classify_rapid(eca(90)).verdict == RapidVerdict::Yes);
  // Too small a budget never yields Yes.
  CHECK(classify_rapid(mul32(), {}, DeciderLimits{10, 1}).verdict == RapidVerdict::Unknown);
}
