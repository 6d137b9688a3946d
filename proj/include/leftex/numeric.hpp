#ifndef LEFTEX_NUMERIC_HPP
#define LEFTEX_NUMERIC_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "leftex/automaton.hpp"
#include "leftex/config.hpp"

namespace leftex {

/// A reduced fraction num/den with num, den >= 1.
class PositiveRational {
 public:
  explicit PositiveRational(mpq_class value);
  PositiveRational(long num, long den);

  /// Accepts `NUM/DEN` or a plain integer. Throws Parse, NotPositive.
  static PositiveRational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  std::string to_string() const;

  friend bool operator==(const PositiveRational& a, const PositiveRational& b) { return a.value_ == b.value_; }
  friend PositiveRational operator*(const PositiveRational& a, const PositiveRational& b) {
    return PositiveRational(mpq_class(a.value_ * b.value_));
  }

 private:
  mpq_class value_;
};

/// Coprime p > q > 1.
struct MulSpec {
  int p;
  int q;

  /// Throws BadSpec.
  void validate() const;
  int base() const { return p * q; }
};

/// Base-n expansion of xi without an infinite tail of n-1: x[i] = xi_{-i-1}.
/// Throws BadBase.
Configuration config_n(const PositiveRational& xi, int n);

/// Sum over i of x[i] n^(-i-1), exact. Throws NotNumberLike, BadBase.
PositiveRational real_n(const Configuration& x, int n);

/// Mul_{p,pq}: the (0,1) rule f(a1 q + a0, b1 q + b0) = a0 p + b1.
Automaton build_mul_rule(const MulSpec& spec);

/// Mul_{p/q,pq} = sigma^-1 o Mul_{p,pq} o Mul_{p,pq}.
Automaton build_frac_mul(const MulSpec& spec);

/// True iff for 1 <= t <= steps both Mul_{p,pq}^t(config(xi)) has value p^t xi
/// and Mul_{p/q,pq}^t(config(xi)) has value (p/q)^t xi.
bool verify_mul(const MulSpec& spec, const PositiveRational& xi, int steps);
/// Same check with caller-supplied automata, e.g. deliberately corrupted ones.
bool verify_mul(const MulSpec& spec, const PositiveRational& xi, int steps, const Automaton& mul_int,
                const Automaton& mul_frac);

}  // namespace leftex

#endif  // LEFTEX_NUMERIC_HPP
