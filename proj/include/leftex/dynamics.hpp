#ifndef LEFTEX_DYNAMICS_HPP
#define LEFTEX_DYNAMICS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leftex/automaton.hpp"
#include "leftex/config.hpp"
#include "leftex/deciders.hpp"

namespace leftex {

/// seq[t+p] == seq[t] for preperiod <= t < verified_up_to - p, with
/// verified_up_to >= preperiod + 2*period.
struct PeriodCertificate {
  std::int64_t preperiod = 0;
  std::int64_t period = 1;
  std::int64_t verified_up_to = 0;

  friend bool operator==(const PeriodCertificate&, const PeriodCertificate&) = default;
};

/// Dense ids for the distinct words of a trace, in first-occurrence order.
std::vector<std::uint32_t> intern_words(std::span<const Word> words);

/// Smallest preperiod c <= max_c, then smallest period p <= max_p, such that the
/// prefix is p-periodic from c on and long enough to show it twice (L >= c+2p).
std::optional<PeriodCertificate> detect_eventual_period(std::span<const std::uint32_t> prefix, std::int64_t max_c,
                                                        std::int64_t max_p);
std::optional<PeriodCertificate> detect_eventual_period(std::span<const Word> prefix, std::int64_t max_c,
                                                        std::int64_t max_p);

/// Re-checks a certificate symbol by symbol.
bool certificate_holds(std::span<const std::uint32_t> prefix, const PeriodCertificate& cert);

struct AperiodicityReport {
  Index i = 0;
  Index j = 0;
  std::int64_t horizon = 0;
  std::int64_t max_c = 0;
  std::int64_t max_p = 0;
  std::optional<PeriodCertificate> period;  ///< empty means NoPeriodFound
  std::vector<std::uint32_t> trace_ids;     ///< interned trace, for follow-up checks
};

/// Throws NotNumberLike, EmptyInterval.
AperiodicityReport aperiodicity_scan(const Automaton& f, const Configuration& x, Index i, Index j,
                                     std::int64_t horizon, std::int64_t max_c, std::int64_t max_p);

/// Distinct length-n factors. Throws PrefixTooShort.
std::size_t subword_complexity(std::span<const std::uint32_t> prefix, std::size_t n);

/// All t in [1,T] with frac_c(F^t(x)) == frac_c(x), compared exactly.
std::vector<std::int64_t> recurrence_scan(const Automaton& f, const Configuration& x, Index c, std::int64_t horizon);

struct CensusRow {
  int n;
  std::size_t census;
};

/// Distinct length-n prefixes of frac_c(F^t(x)) over ceil(T/2) <= t <= T.
std::vector<CensusRow> limit_census(const Automaton& f, const Configuration& x, Index c, std::int64_t horizon,
                                    std::span<const int> lengths);

/// Given a period certificate for the width-w trace at column i, checks that
/// the trace at [i-1, i+w-2] is p-periodic from c+h on the materialized prefix.
/// Throws PreconditionFailed, InsufficientHorizon.
bool propagation_check(const Automaton& f, const ExpansivityDims& dims, const Configuration& x, Index i,
                       const PeriodCertificate& cert, std::int64_t horizon, const DeciderLimits& limits = {});

/// ceil((h+d) * |A|^(t*w) / t): least N with (h+d)|A|^(tw) <= tN.
mpz_class repetition_N(int alphabet_size, int t, int w, int h, int d);
/// m(e-1). Throws InvalidArgument for e < 1.
std::int64_t preperiod_c(int m, int e);

}  // namespace leftex

#endif  // LEFTEX_DYNAMICS_HPP
