#ifndef LEFTEX_AUTOMATON_HPP
#define LEFTEX_AUTOMATON_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leftex/config.hpp"

namespace leftex {

inline constexpr std::size_t kDefaultMaxTableEntries = 10'000'000;

/// An (m,n) local rule: a total table A^(m+n+1) -> A. Neighborhoods are indexed
/// as base-|A| numbers with the leftmost symbol most significant, so for binary
/// (1,1) rules index(abc) = 4a+2b+c.
class LocalRule {
 public:
  LocalRule(Alphabet alphabet, int memory, int anticipation, std::vector<Symbol> table,
            std::size_t max_entries = kDefaultMaxTableEntries);

  static LocalRule from_function(Alphabet alphabet, int memory, int anticipation,
                                 const std::function<Symbol(std::span<const Symbol>)>& f,
                                 std::size_t max_entries = kDefaultMaxTableEntries);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int memory() const noexcept { return memory_; }
  int anticipation() const noexcept { return anticipation_; }
  int radius() const noexcept { return memory_ > anticipation_ ? memory_ : anticipation_; }
  int window_size() const noexcept { return memory_ + anticipation_ + 1; }
  std::size_t table_size() const noexcept { return table_.size(); }
  const std::vector<Symbol>& table() const noexcept { return table_; }

  Symbol lookup(std::size_t index) const { return table_[index]; }
  std::size_t index_of(std::span<const Symbol> neighborhood) const;
  Symbol operator()(std::span<const Symbol> neighborhood) const { return table_[index_of(neighborhood)]; }
  std::vector<Symbol> neighborhood_of(std::size_t index) const;

  /// Same map with memory/anticipation changed. Growing pads with ignored
  /// positions; shrinking is allowed only where the table does not depend on
  /// the dropped positions. Throws IncompatibleRule.
  LocalRule reexpress(int memory, int anticipation) const;

  /// Drops outer positions the table does not depend on.
  LocalRule trimmed() const;

  bool depends_on_first() const;
  bool depends_on_last() const;

  friend bool operator==(const LocalRule&, const LocalRule&) = default;

 private:
  Alphabet alphabet_;
  int memory_;
  int anticipation_;
  std::vector<Symbol> table_;
};

/// Explicit table entries; every neighborhood must be present.
LocalRule make_rule(Alphabet alphabet, int memory, int anticipation,
                    const std::map<std::vector<Symbol>, Symbol>& entries);

/// Wolfram numbering: the output for neighborhood abc is bit 4a+2b+c of `number`.
LocalRule eca_rule(int number);

LocalRule shift_rule(Alphabet alphabet);          ///< sigma, (0,1): f(a,b) = b
LocalRule inverse_shift_rule(Alphabet alphabet);  ///< sigma^-1, (1,0): f(a,b) = a
LocalRule identity_rule(Alphabet alphabet);       ///< (0,0)

/// Knowledge about automata built from the multiplication family.
struct MulFamily {
  int p = 0;
  int q = 0;
  bool fractional = false;  ///< true for Mul_{p/q,pq}, false for Mul_{p,pq}

  friend bool operator==(const MulFamily&, const MulFamily&) = default;
};

class Automaton {
 public:
  explicit Automaton(LocalRule rule, std::string label = {}, std::optional<MulFamily> family = std::nullopt)
      : rule_(std::move(rule)), label_(std::move(label)), family_(family) {}

  const LocalRule& rule() const noexcept { return rule_; }
  const Alphabet& alphabet() const noexcept { return rule_.alphabet(); }
  const std::string& label() const noexcept { return label_; }
  const std::optional<MulFamily>& family() const noexcept { return family_; }
  int radius() const noexcept { return rule_.radius(); }

 private:
  LocalRule rule_;
  std::string label_;
  std::optional<MulFamily> family_;
};

/// F(x), exact on the tail representation. Throws AlphabetMismatch.
Configuration apply(const Automaton& f, const Configuration& x);
Configuration apply(const LocalRule& f, const Configuration& x);
Configuration iterate(const Automaton& f, Configuration x, std::int64_t steps);

/// (F o G). The substituted table is trimmed of positions it does not depend on.
/// Throws AlphabetMismatch, TableTooLarge.
Automaton compose(const Automaton& f, const Automaton& g, std::size_t max_entries = kDefaultMaxTableEntries);

/// Entry t is window(F^t(x), i, j) for t = 0..T-1.
std::vector<Word> trace(const Automaton& f, const Configuration& x, Index i, Index j, std::int64_t horizon);

struct SpaceTimePatch {
  std::vector<Word> rows;
};

/// Row 0 is the seed; row k+1 applies the table to every window of row k.
/// Throws SeedTooShort.
SpaceTimePatch patch(const Automaton& f, const Word& seed, int rows);

}  // namespace leftex

#endif  // LEFTEX_AUTOMATON_HPP
