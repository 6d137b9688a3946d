#ifndef LEFTEX_CONFIG_HPP
#define LEFTEX_CONFIG_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "leftex/error.hpp"

namespace leftex {

using Symbol = std::uint16_t;
using Index = std::int64_t;

/// The symbol set {0, ..., size-1}.
class Alphabet {
 public:
  explicit Alphabet(int size);

  int size() const noexcept { return size_; }
  bool contains(int s) const noexcept { return s >= 0 && s < size_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

/// A finite sequence of symbols typed by its alphabet.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Symbol> symbols);
  Word(Alphabet alphabet, std::initializer_list<int> symbols);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t k) const { return symbols_[k]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Digits concatenated for alphabets up to 10 symbols, comma separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.symbols_ <=> b.symbols_; }

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

// Word helpers shared by the canonicalizers.
std::size_t smallest_period(std::span<const Symbol> w);
std::vector<Symbol> primitive_root(std::span<const Symbol> w);
std::vector<Symbol> rotate_left(std::span<const Symbol> w, std::size_t k);

/// An eventually periodic element of A^N: head followed by period repeated forever.
/// Always canonical (primitive period, shortest head).
class OneSidedSeq {
 public:
  OneSidedSeq(Alphabet alphabet, std::vector<Symbol> head, std::vector<Symbol> period);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Symbol>& head() const noexcept { return head_; }
  const std::vector<Symbol>& period() const noexcept { return period_; }
  Symbol at(Index i) const;
  std::vector<Symbol> prefix(std::size_t n) const;

  friend bool operator==(const OneSidedSeq&, const OneSidedSeq&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> head_;
  std::vector<Symbol> period_;
};

/// Exact equality of the infinite sequences. Throws AlphabetMismatch.
bool seq_equal(const OneSidedSeq& a, const OneSidedSeq& b);

/// Bi-infinite configuration with eventually periodic tails:
///   x[anchor-1-k] = left[(|left|-1-k) mod |left|]   for k >= 0
///   x[anchor+j]   = head[j]                          for 0 <= j < |head|
///   x[anchor+|head|+j] = right[j mod |right|]        for j >= 0
///
/// Instances are always canonical: primitive tails, the head absorbed into the
/// tails as far as possible, and when the head is empty the boundary pushed as
/// far right as the left tail continues. A globally periodic configuration has
/// left == right and its anchor reduced to [0, period). Structural equality is
/// therefore equality of configurations.
class Configuration {
 public:
  Configuration(Alphabet alphabet, Index anchor, std::vector<Symbol> left, std::vector<Symbol> head,
                std::vector<Symbol> right);

  static Configuration zero(Alphabet alphabet);
  /// Zeros everywhere except `symbol` at `position`.
  static Configuration single(Alphabet alphabet, Index position, Symbol symbol = 1);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Index anchor() const noexcept { return anchor_; }
  const std::vector<Symbol>& left_period() const noexcept { return left_; }
  const std::vector<Symbol>& head() const noexcept { return head_; }
  const std::vector<Symbol>& right_period() const noexcept { return right_; }

  Symbol at(Index i) const;
  bool is_zero() const noexcept;
  bool is_number_like() const noexcept;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  void canonicalize();

  Alphabet alphabet_;
  Index anchor_;
  std::vector<Symbol> left_;
  std::vector<Symbol> head_;
  std::vector<Symbol> right_;
};

/// Minimal N with x[N] != 0. Throws NotNumberLike.
Index left_edge(const Configuration& x);

/// x[i..j]. Throws EmptyInterval when i > j.
Word window(const Configuration& x, Index i, Index j);

/// y[i] = x[i+k].
Configuration shift_by(const Configuration& x, Index k);

/// i -> x[c+i].
OneSidedSeq frac_of(const Configuration& x, Index c);

// Literal format: `[L:word] head [R:word] @anchor`.
std::string to_literal(const Configuration& x);
/// Throws Error(Parse) with a `line:column` position in the message.
Configuration parse_configuration(std::string_view text, Alphabet alphabet);
std::vector<Symbol> parse_word(std::string_view text, Alphabet alphabet);

}  // namespace leftex

#endif  // LEFTEX_CONFIG_HPP
