#ifndef LEFTEX_DECIDERS_HPP
#define LEFTEX_DECIDERS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leftex/automaton.hpp"
#include "leftex/config.hpp"

namespace leftex {

/// Rectangle dimensions: h rows above and d rows below the reference row, w columns.
struct ExpansivityDims {
  int h = 0;
  int d = 0;
  int w = 1;

  void validate() const;  ///< Throws BadDims.
  friend bool operator==(const ExpansivityDims&, const ExpansivityDims&) = default;
};

enum class VerdictStatus { True, False, Unknown };
const char* to_string(VerdictStatus s) noexcept;

struct Counterexample {
  Word seed_a;  ///< smallest seed of the shared rectangle contents
  Word seed_b;  ///< smallest seed disagreeing with seed_a on the determined cell
  std::vector<Symbol> contents;
  Symbol value_a;
  Symbol value_b;
};

struct PropertyVerdict {
  std::string property;
  VerdictStatus status = VerdictStatus::Unknown;
  std::optional<ExpansivityDims> dims;
  std::uint64_t seeds_checked = 0;
  std::uint64_t seed_space = 0;  ///< 0 when |A|^L does not fit in 64 bits
  std::optional<Counterexample> counterexample;
  std::string resource_report;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct DeciderLimits {
  std::uint64_t budget = kDefaultBudget;  ///< table evaluations per decider call
  unsigned threads = 1;                   ///< seed-space partitions run concurrently
};

/// Budget from LEFTEX_BUDGET when set, the default otherwise.
std::uint64_t budget_from_env();

/// True iff for every v in A^(m+n), a -> f(av) is a bijection. The rule is
/// re-expressed with the requested (m,n). Throws BadDims (m < 1), IncompatibleRule.
bool is_left_permutive(const LocalRule& rule, int m, int n);

/// Seed length enumerated by is_left_expansive: (w+1) + (m+n)(h+d).
int expansivity_seed_length(const LocalRule& rule, const ExpansivityDims& dims);

struct RectangleReading {
  std::vector<Symbol> contents;  ///< row-major, rows t-h..t+d, columns c..c+w-1
  Symbol determined;             ///< cell (c-1, t)
};

/// Reads the rectangle and determined cell from the patch grown from `seed`
/// placed as row t-h. Used to replay counterexamples.
RectangleReading read_rectangle(const Automaton& f, const ExpansivityDims& dims, const Word& seed);

/// Exhaustively decides whether rectangle contents determine the cell to their
/// left. Unknown when the enumeration would exceed the budget.
PropertyVerdict is_left_expansive(const Automaton& f, const ExpansivityDims& dims, const DeciderLimits& limits = {});

struct DimsSearch {
  std::optional<ExpansivityDims> dims;
  bool budget_exhausted = false;  ///< some candidate came back Unknown
  int candidates_checked = 0;
};

/// Smallest dims by h+d+w, then h, then d, with a True verdict.
DimsSearch find_left_expansive_dims(const Automaton& f, int max_h, int max_d, int max_w,
                                    const DeciderLimits& limits = {});

/// True iff the rule, re-expressed as a binary (1,1) rule, maps 001 to 1. Throws NotECA.
bool is_left_spreading_eca(const LocalRule& rule);
/// Binary and expressible with (m,n) = (1,1).
bool is_eca(const LocalRule& rule);
/// f(0,...,0) == 0.
bool is_zero_quiescent(const LocalRule& rule);

struct SpreadingEvidence {
  /// Per sample: least t <= T with left_edge(F^t(x)) < left_edge(x), if any.
  std::vector<std::optional<std::int64_t>> witness;
  bool all_witnessed() const;
};

/// Throws ZeroNotQuiescent, NotNumberLike.
SpreadingEvidence empirical_left_spreading(const Automaton& f, const std::vector<Configuration>& samples,
                                           std::int64_t horizon);

struct SpeedEstimate {
  std::size_t samples = 0;
  std::int64_t horizon = 0;
  /// Per sample: max over ceil(T/2) <= t <= T of (l(x) - l(F^t(x))) / t.
  std::vector<std::optional<mpq_class>> per_sample;
  std::optional<mpq_class> s_hat;
};

SpeedEstimate estimate_spreading_speed(const Automaton& f, const std::vector<Configuration>& samples,
                                       std::int64_t horizon);

enum class RapidVerdict { Yes, No, Unknown };
enum class SpeedBasis { ExactFamily, Empirical, None };
const char* to_string(RapidVerdict v) noexcept;
const char* to_string(SpeedBasis b) noexcept;

struct RapidSearchBounds {
  int max_h = 2;
  int max_d = 2;
  int max_w = 4;
};

struct RapidClassification {
  RapidVerdict verdict = RapidVerdict::Unknown;
  std::optional<ExpansivityDims> dims;
  SpeedBasis speed_basis = SpeedBasis::None;
  std::string reason;
};

/// Yes only from a proved dims with exact speed knowledge (h = 0 with left
/// spreading established, or a fractional multiplication automaton); No from
/// proved disqualifiers; Unknown otherwise.
RapidClassification classify_rapid(const Automaton& f, const RapidSearchBounds& bounds = {},
                                   const DeciderLimits& limits = {});

}  // namespace leftex

#endif  // LEFTEX_DECIDERS_HPP
