#include "leftex/numeric.hpp"

#include <bit>
#include <numeric>

namespace leftex {

PositiveRational::PositiveRational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ <= 0) throw Error(ErrorCode::NotPositive, "rational must be positive, got " + value_.get_str());
}

PositiveRational::PositiveRational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::NotPositive, "zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
  if (value_ <= 0) throw Error(ErrorCode::NotPositive, "rational must be positive, got " + value_.get_str());
}

PositiveRational PositiveRational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorCode::Parse, "expected NUM/DEN or an integer, got '" + std::string(text) + "'");
  }
  const mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::NotPositive, "zero denominator");
  return PositiveRational(mpq_class(mpz_class(std::string(num), 10), d));
}

std::string PositiveRational::to_string() const { return value_.get_str(); }

void MulSpec::validate() const {
  if (q <= 1 || p <= q || std::gcd(p, q) != 1) {
    throw Error(ErrorCode::BadSpec, "need coprime p > q > 1, got p=" + std::to_string(p) + " q=" + std::to_string(q));
  }
  if (p * q > 65536) throw Error(ErrorCode::BadSpec, "base p*q too large");
}

namespace {

void check_base(int n) {
  if (n < 2 || n > 65536) throw Error(ErrorCode::BadBase, "base must be in [2, 65536], got " + std::to_string(n));
}

// GMP's digit alphabet for bases up to 62.
char digit_char(Symbol d, int base) {
  if (d < 10) return static_cast<char>('0' + d);
  if (base <= 36) return static_cast<char>('a' + (d - 10));
  if (d < 36) return static_cast<char>('A' + (d - 10));
  return static_cast<char>('a' + (d - 36));
}

Symbol char_value(char c, int base) {
  if (c >= '0' && c <= '9') return static_cast<Symbol>(c - '0');
  if (base <= 36) return static_cast<Symbol>(c - 'a' + 10);
  if (c >= 'A' && c <= 'Z') return static_cast<Symbol>(c - 'A' + 10);
  return static_cast<Symbol>(c - 'a' + 36);
}

// Most significant digit first.
mpz_class digits_to_mpz(std::span<const Symbol> digits, int base) {
  if (digits.empty()) return 0;
  if (base <= 62) {
    std::string s(digits.size(), '0');
    for (std::size_t k = 0; k < digits.size(); ++k) s[k] = digit_char(digits[k], base);
    return mpz_class(s, base);
  }
  if (digits.size() <= 32) {
    mpz_class v = 0;
    for (Symbol d : digits) v = v * base + d;
    return v;
  }
  const std::size_t mid = digits.size() / 2;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(base), digits.size() - mid);
  return digits_to_mpz(digits.first(mid), base) * scale + digits_to_mpz(digits.subspan(mid), base);
}

std::vector<Symbol> mpz_to_digits(const mpz_class& v, int base) {
  std::vector<Symbol> out;
  if (v == 0) return out;
  if (base <= 62) {
    const std::string s = v.get_str(base);
    out.reserve(s.size());
    for (char c : s) out.push_back(char_value(c, base));
    return out;
  }
  mpz_class rest = v;
  while (rest > 0) {
    out.push_back(static_cast<Symbol>(mpz_class(rest % base).get_ui()));
    rest /= base;
  }
  return {out.rbegin(), out.rend()};
}

struct Expansion {
  std::vector<Symbol> head;
  std::vector<Symbol> period;
};

// Digits of r/b in base n (0 <= r < b) split into preperiod and period using
// Floyd cycle detection on the remainder sequence r -> r*n mod b.
template <typename Rem, typename Step, typename Digit>
Expansion fraction_digits(Rem r0, Step step, Digit digit) {
  Rem tortoise = step(r0);
  Rem hare = step(step(r0));
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(step(hare));
  }
  std::size_t mu = 0;
  tortoise = r0;
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  std::size_t lambda = 1;
  hare = step(tortoise);
  while (tortoise != hare) {
    hare = step(hare);
    ++lambda;
  }
  Expansion e;
  e.head.reserve(mu);
  e.period.reserve(lambda);
  Rem r = r0;
  for (std::size_t k = 0; k < mu + lambda; ++k) {
    (k < mu ? e.head : e.period).push_back(digit(r));
    r = step(r);
  }
  return e;
}

Expansion fraction_expansion(const mpz_class& r, const mpz_class& b, int n) {
  if (mpz_sizeinbase(b.get_mpz_t(), 2) + std::bit_width(static_cast<unsigned>(n)) <= 64) {
    const std::uint64_t bb = b.get_ui();
    const auto nn = static_cast<std::uint64_t>(n);
    return fraction_digits(
        static_cast<std::uint64_t>(mpz_class(r).get_ui()), [=](std::uint64_t x) { return x * nn % bb; },
        [=](std::uint64_t x) { return static_cast<Symbol>(x * nn / bb); });
  }
  if (mpz_sizeinbase(b.get_mpz_t(), 2) <= 62) {
    using u128 = unsigned __int128;
    const std::uint64_t bb = b.get_ui();
    const auto nn = static_cast<std::uint64_t>(n);
    return fraction_digits(
        static_cast<std::uint64_t>(mpz_class(r).get_ui()),
        [=](std::uint64_t x) { return static_cast<std::uint64_t>(static_cast<u128>(x) * nn % bb); },
        [=](std::uint64_t x) { return static_cast<Symbol>(static_cast<u128>(x) * nn / bb); });
  }
  return fraction_digits(
      mpz_class(r), [&](const mpz_class& x) { return mpz_class((x * n) % b); },
      [&](const mpz_class& x) { return static_cast<Symbol>(mpz_class((x * n) / b).get_ui()); });
}

}  // namespace

Configuration config_n(const PositiveRational& xi, int n) {
  check_base(n);
  const mpz_class num = xi.numerator();
  const mpz_class den = xi.denominator();
  const mpz_class integer = num / den;
  const mpz_class rem = num % den;

  std::vector<Symbol> head = mpz_to_digits(integer, n);
  const auto anchor = -static_cast<Index>(head.size());
  Expansion frac = fraction_expansion(rem, den, n);
  head.insert(head.end(), frac.head.begin(), frac.head.end());
  return Configuration(Alphabet(n), anchor, {0}, std::move(head), std::move(frac.period));
}

PositiveRational real_n(const Configuration& x, int n) {
  check_base(n);
  if (x.alphabet().size() != n) {
    throw Error(ErrorCode::BadBase, "configuration over alphabet " + std::to_string(x.alphabet().size()) +
                                        " read in base " + std::to_string(n));
  }
  if (!x.is_number_like()) throw Error(ErrorCode::NotNumberLike, "real_n of a configuration that is not number-like");
  const auto& head = x.head();
  const auto& right = x.right_period();

  // value = n^-anchor * (V_head * (n^P - 1) + V_right) / (n^H * (n^P - 1))
  mpz_class n_pow_p;
  mpz_ui_pow_ui(n_pow_p.get_mpz_t(), static_cast<unsigned long>(n), right.size());
  const mpz_class repunit = n_pow_p - 1;
  mpz_class numer = digits_to_mpz(head, n) * repunit + digits_to_mpz(right, n);
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n), head.size());
  denom *= repunit;

  const Index a = x.anchor();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(a < 0 ? -a : a));
  if (a < 0) {
    numer *= scale;
  } else {
    denom *= scale;
  }
  return PositiveRational(mpq_class(numer, denom));
}

Automaton build_mul_rule(const MulSpec& spec) {
  spec.validate();
  const int p = spec.p;
  const int q = spec.q;
  LocalRule rule = LocalRule::from_function(Alphabet(p * q), 0, 1, [p, q](std::span<const Symbol> v) {
    const int a0 = v[0] % q;
    const int b1 = v[1] / q;
    return static_cast<Symbol>(a0 * p + b1);
  });
  return Automaton(std::move(rule), "mulint:" + std::to_string(p) + "/" + std::to_string(q), MulFamily{p, q, false});
}

Automaton build_frac_mul(const MulSpec& spec) {
  const Automaton mul = build_mul_rule(spec);
  const Automaton unshift(inverse_shift_rule(mul.alphabet()), "shift^-1");
  const Automaton composed = compose(unshift, compose(mul, mul));
  return Automaton(composed.rule(), "mul:" + std::to_string(spec.p) + "/" + std::to_string(spec.q),
                   MulFamily{spec.p, spec.q, true});
}

namespace {

bool has_value(const Configuration& x, const PositiveRational& expected, int base) {
  // Structural equality with the canonical expansion implies equal value; the
  // exact evaluation covers the alternative (n-1)-tail representative.
  if (x == config_n(expected, base)) return true;
  if (!x.is_number_like()) return false;
  return real_n(x, base) == expected;
}

}  // namespace

bool verify_mul(const MulSpec& spec, const PositiveRational& xi, int steps, const Automaton& mul_int,
                const Automaton& mul_frac) {
  spec.validate();
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be >= 1");
  const int base = spec.base();
  const PositiveRational p(spec.p, 1);
  const PositiveRational ratio(spec.p, spec.q);
  Configuration xi_int = config_n(xi, base);
  Configuration xi_frac = xi_int;
  PositiveRational want_int = xi;
  PositiveRational want_frac = xi;
  for (int t = 1; t <= steps; ++t) {
    xi_int = apply(mul_int, xi_int);
    xi_frac = apply(mul_frac, xi_frac);
    want_int = want_int * p;
    want_frac = want_frac * ratio;
    if (!has_value(xi_int, want_int, base) || !has_value(xi_frac, want_frac, base)) return false;
  }
  return true;
}

bool verify_mul(const MulSpec& spec, const PositiveRational& xi, int steps) {
  return verify_mul(spec, xi, steps, build_mul_rule(spec), build_frac_mul(spec));
}

}  // namespace leftex
