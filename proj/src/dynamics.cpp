#include "leftex/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace leftex {

std::vector<std::uint32_t> intern_words(std::span<const Word> words) {
  std::map<std::vector<Symbol>, std::uint32_t> ids;
  std::vector<std::uint32_t> out;
  out.reserve(words.size());
  for (const Word& w : words) {
    std::vector<Symbol> key(w.symbols().begin(), w.symbols().end());
    auto [it, inserted] = ids.try_emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

std::optional<PeriodCertificate> detect_eventual_period(std::span<const std::uint32_t> prefix, std::int64_t max_c,
                                                        std::int64_t max_p) {
  const auto len = static_cast<std::int64_t>(prefix.size());
  std::optional<PeriodCertificate> best;
  // For each p, the least c_p such that the prefix is p-periodic from c_p on.
  for (std::int64_t p = 1; p <= max_p && 2 * p <= len; ++p) {
    std::int64_t c = len - p;
    while (c > 0 && prefix[static_cast<std::size_t>(c - 1)] == prefix[static_cast<std::size_t>(c - 1 + p)]) --c;
    if (c > max_c || c + 2 * p > len) continue;
    if (!best || c < best->preperiod) best = PeriodCertificate{c, p, len};
  }
  return best;
}

std::optional<PeriodCertificate> detect_eventual_period(std::span<const Word> prefix, std::int64_t max_c,
                                                        std::int64_t max_p) {
  const auto ids = intern_words(prefix);
  return detect_eventual_period(ids, max_c, max_p);
}

bool certificate_holds(std::span<const std::uint32_t> prefix, const PeriodCertificate& cert) {
  const auto len = static_cast<std::int64_t>(prefix.size());
  if (cert.period < 1 || cert.preperiod < 0 || cert.verified_up_to > len) return false;
  if (cert.verified_up_to < cert.preperiod + 2 * cert.period) return false;
  for (std::int64_t t = cert.preperiod; t + cert.period < cert.verified_up_to; ++t) {
    if (prefix[static_cast<std::size_t>(t)] != prefix[static_cast<std::size_t>(t + cert.period)]) return false;
  }
  return true;
}

AperiodicityReport aperiodicity_scan(const Automaton& f, const Configuration& x, Index i, Index j,
                                     std::int64_t horizon, std::int64_t max_c, std::int64_t max_p) {
  if (!x.is_number_like()) throw Error(ErrorCode::NotNumberLike, "aperiodicity scan needs a number-like configuration");
  AperiodicityReport r;
  r.i = i;
  r.j = j;
  r.horizon = horizon;
  r.max_c = max_c;
  r.max_p = max_p;
  const auto words = trace(f, x, i, j, horizon);
  r.trace_ids = intern_words(words);
  r.period = detect_eventual_period(r.trace_ids, max_c, max_p);
  return r;
}

std::size_t subword_complexity(std::span<const std::uint32_t> prefix, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "factor length must be >= 1");
  if (prefix.size() < n) {
    throw Error(ErrorCode::PrefixTooShort,
                "prefix of length " + std::to_string(prefix.size()) + " has no factors of length " + std::to_string(n));
  }
  std::set<std::vector<std::uint32_t>> factors;
  for (std::size_t k = 0; k + n <= prefix.size(); ++k) {
    factors.emplace(prefix.begin() + static_cast<std::ptrdiff_t>(k), prefix.begin() + static_cast<std::ptrdiff_t>(k + n));
  }
  return factors.size();
}

std::vector<std::int64_t> recurrence_scan(const Automaton& f, const Configuration& x, Index c, std::int64_t horizon) {
  const OneSidedSeq base = frac_of(x, c);
  std::vector<std::int64_t> hits;
  Configuration y = x;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    y = apply(f, y);
    if (seq_equal(frac_of(y, c), base)) hits.push_back(t);
  }
  return hits;
}

std::vector<CensusRow> limit_census(const Automaton& f, const Configuration& x, Index c, std::int64_t horizon,
                                    std::span<const int> lengths) {
  int longest = 0;
  for (int n : lengths) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "census prefix length must be >= 1");
    longest = std::max(longest, n);
  }
  std::vector<std::set<std::vector<Symbol>>> seen(lengths.size());
  const std::int64_t from = (horizon + 1) / 2;
  Configuration y = x;
  for (std::int64_t t = 0; t <= horizon; ++t) {
    if (t > 0) y = apply(f, y);
    if (t < from || longest == 0) continue;
    const Word w = window(y, c, c + longest - 1);
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      seen[k].emplace(w.symbols().begin(), w.symbols().begin() + lengths[k]);
    }
  }
  std::vector<CensusRow> out;
  for (std::size_t k = 0; k < lengths.size(); ++k) out.push_back({lengths[k], seen[k].size()});
  return out;
}

bool propagation_check(const Automaton& f, const ExpansivityDims& dims, const Configuration& x, Index i,
                       const PeriodCertificate& cert, std::int64_t horizon, const DeciderLimits& limits) {
  dims.validate();
  const std::int64_t start = cert.preperiod + dims.h;
  if (horizon < start + 2 * cert.period) {
    throw Error(ErrorCode::InsufficientHorizon, "horizon " + std::to_string(horizon) + " < c+h+2p = " +
                                                    std::to_string(start + 2 * cert.period));
  }
  if (is_left_expansive(f, dims, limits).status != VerdictStatus::True) {
    throw Error(ErrorCode::PreconditionFailed, "automaton is not proved left expansive with these dims");
  }
  const auto given = intern_words(trace(f, x, i, i + dims.w - 1, horizon));
  PeriodCertificate bounded = cert;
  bounded.verified_up_to = horizon;
  if (!certificate_holds(given, bounded)) {
    throw Error(ErrorCode::PreconditionFailed, "certificate does not hold on the width-w trace");
  }
  const auto shifted = intern_words(trace(f, x, i - 1, i + dims.w - 2, horizon));
  for (std::int64_t t = start; t + cert.period < horizon; ++t) {
    if (shifted[static_cast<std::size_t>(t)] != shifted[static_cast<std::size_t>(t + cert.period)]) return false;
  }
  return true;
}

mpz_class repetition_N(int alphabet_size, int t, int w, int h, int d) {
  if (alphabet_size < 1 || t < 1 || w < 1 || h < 0 || d < 0) {
    throw Error(ErrorCode::InvalidArgument, "repetition_N needs |A|, t, w >= 1 and h, d >= 0");
  }
  mpz_class k;
  mpz_ui_pow_ui(k.get_mpz_t(), static_cast<unsigned long>(alphabet_size), static_cast<unsigned long>(t) * w);
  mpz_class numer = k * (h + d);
  mpz_class n;
  mpz_cdiv_q_ui(n.get_mpz_t(), numer.get_mpz_t(), static_cast<unsigned long>(t));
  return n;
}

std::int64_t preperiod_c(int m, int e) {
  if (m < 0 || e < 1) throw Error(ErrorCode::InvalidArgument, "preperiod_c needs m >= 0 and e >= 1");
  return static_cast<std::int64_t>(m) * (e - 1);
}

}  // namespace leftex
