#include "leftex/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace leftex {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::SymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorCode::NotNumberLike: return "NotNumberLike";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SeedTooShort: return "SeedTooShort";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::BadBase: return "BadBase";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BadDims: return "BadDims";
    case ErrorCode::IncompatibleRule: return "IncompatibleRule";
    case ErrorCode::NotECA: return "NotECA";
    case ErrorCode::ZeroNotQuiescent: return "ZeroNotQuiescent";
    case ErrorCode::PrefixTooShort: return "PrefixTooShort";
    case ErrorCode::InsufficientHorizon: return "InsufficientHorizon";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::PaletteIncomplete: return "PaletteIncomplete";
    case ErrorCode::NonBinaryForPBM: return "NonBinaryForPBM";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > 65536) {
    throw Error(ErrorCode::InvalidArgument, "alphabet size must be in [1, 65536], got " + std::to_string(size));
  }
}

namespace {

void check_symbols(const Alphabet& a, std::span<const Symbol> s) {
  for (Symbol v : s) {
    if (!a.contains(v)) {
      throw Error(ErrorCode::SymbolOutOfRange,
                  "symbol " + std::to_string(v) + " outside alphabet of size " + std::to_string(a.size()));
    }
  }
}

Index floor_mod(Index a, Index m) {
  Index r = a % m;
  return r < 0 ? r + m : r;
}

std::string symbols_to_string(std::span<const Symbol> s, int alphabet_size) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (alphabet_size <= 10) {
      out.push_back(static_cast<char>('0' + s[k]));
    } else {
      if (k > 0) out.push_back(',');
      out += std::to_string(s[k]);
    }
  }
  return out;
}

}  // namespace

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols) : alphabet_(alphabet), symbols_(std::move(symbols)) {
  check_symbols(alphabet_, symbols_);
}

Word::Word(Alphabet alphabet, std::initializer_list<int> symbols) : alphabet_(alphabet) {
  for (int s : symbols) {
    if (!alphabet_.contains(s)) {
      throw Error(ErrorCode::SymbolOutOfRange, "symbol " + std::to_string(s) + " outside alphabet");
    }
    symbols_.push_back(static_cast<Symbol>(s));
  }
}

std::string Word::to_string() const { return symbols_to_string(symbols_, alphabet_.size()); }

std::size_t smallest_period(std::span<const Symbol> w) {
  // Knuth-Morris-Pratt failure function; the smallest period is n - border(n).
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::size_t> fail(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return n - fail[n];
}

std::vector<Symbol> primitive_root(std::span<const Symbol> w) {
  const std::size_t p = smallest_period(w);
  if (p == 0 || w.size() % p != 0) return {w.begin(), w.end()};
  return {w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p)};
}

std::vector<Symbol> rotate_left(std::span<const Symbol> w, std::size_t k) {
  std::vector<Symbol> out(w.begin(), w.end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// OneSidedSeq

OneSidedSeq::OneSidedSeq(Alphabet alphabet, std::vector<Symbol> head, std::vector<Symbol> period)
    : alphabet_(alphabet), head_(std::move(head)), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorCode::InvalidArgument, "period must be nonempty");
  check_symbols(alphabet_, head_);
  check_symbols(alphabet_, period_);
  period_ = primitive_root(period_);
  const std::size_t p = period_.size();
  std::size_t absorbed = 0;
  while (!head_.empty() && head_.back() == period_[(p - 1 - absorbed % p)]) {
    head_.pop_back();
    ++absorbed;
  }
  // Absorbing k symbols rotates the period right by k.
  period_ = rotate_left(period_, p - absorbed % p);
}

Symbol OneSidedSeq::at(Index i) const {
  if (i < 0) throw Error(ErrorCode::OutOfRange, "negative index into one-sided sequence");
  const auto h = static_cast<Index>(head_.size());
  if (i < h) return head_[static_cast<std::size_t>(i)];
  return period_[static_cast<std::size_t>((i - h) % static_cast<Index>(period_.size()))];
}

std::vector<Symbol> OneSidedSeq::prefix(std::size_t n) const {
  std::vector<Symbol> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = at(static_cast<Index>(k));
  return out;
}

bool seq_equal(const OneSidedSeq& a, const OneSidedSeq& b) {
  if (a.alphabet() != b.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "seq_equal over different alphabets");
  // Canonical forms (shortest preperiod, primitive period) are unique.
  return a.head() == b.head() && a.period() == b.period();
}

// ---------------------------------------------------------------------------
// Configuration

Configuration::Configuration(Alphabet alphabet, Index anchor, std::vector<Symbol> left, std::vector<Symbol> head,
                             std::vector<Symbol> right)
    : alphabet_(alphabet), anchor_(anchor), left_(std::move(left)), head_(std::move(head)), right_(std::move(right)) {
  if (left_.empty() || right_.empty()) throw Error(ErrorCode::InvalidArgument, "tail periods must be nonempty");
  check_symbols(alphabet_, left_);
  check_symbols(alphabet_, head_);
  check_symbols(alphabet_, right_);
  canonicalize();
}

Configuration Configuration::zero(Alphabet alphabet) { return Configuration(alphabet, 0, {0}, {}, {0}); }

Configuration Configuration::single(Alphabet alphabet, Index position, Symbol symbol) {
  return Configuration(alphabet, position, {0}, {symbol}, {0});
}

void Configuration::canonicalize() {
  // A power of a primitive word w starts and ends with w, so the prefix serves
  // as the primitive root for both tails irrespective of phase.
  left_ = primitive_root(left_);
  right_ = primitive_root(right_);
  const std::size_t pl = left_.size();
  const std::size_t pr = right_.size();

  std::size_t front = 0;  // symbols absorbed into the left tail
  while (front < head_.size() && head_[front] == left_[front % pl]) ++front;
  std::size_t lrot = front;
  anchor_ += static_cast<Index>(front);

  if (front == head_.size()) {
    head_.clear();
    std::size_t rrot = 0;
    bool periodic = pl == pr;
    for (std::size_t k = 0; periodic && k < pl; ++k) periodic = left_[(lrot + k) % pl] == right_[k];
    if (periodic) {
      const Index p = static_cast<Index>(pl);
      const Index target = floor_mod(anchor_, p);
      const auto shift = static_cast<std::size_t>(floor_mod(lrot + (target - anchor_), p));
      left_ = rotate_left(left_, shift);
      right_ = left_;
      anchor_ = target;
      return;
    }
    // Not globally periodic: by Fine-Wilf this stops within pl + pr steps.
    while (left_[lrot % pl] == right_[rrot % pr]) {
      ++lrot;
      ++rrot;
      ++anchor_;
    }
    left_ = rotate_left(left_, lrot % pl);
    right_ = rotate_left(right_, rrot % pr);
    return;
  }

  std::size_t end = head_.size();
  std::size_t back = 0;  // symbols absorbed into the right tail
  while (end > front && head_[end - 1] == right_[pr - 1 - back % pr]) {
    --end;
    ++back;
  }
  left_ = rotate_left(left_, lrot % pl);
  right_ = rotate_left(right_, pr - back % pr);
  head_ = std::vector<Symbol>(head_.begin() + static_cast<std::ptrdiff_t>(front),
                              head_.begin() + static_cast<std::ptrdiff_t>(end));
}

Symbol Configuration::at(Index i) const {
  if (i < anchor_) {
    const Index k = anchor_ - 1 - i;
    const auto pl = static_cast<Index>(left_.size());
    return left_[static_cast<std::size_t>(pl - 1 - k % pl)];
  }
  const Index j = i - anchor_;
  const auto h = static_cast<Index>(head_.size());
  if (j < h) return head_[static_cast<std::size_t>(j)];
  return right_[static_cast<std::size_t>((j - h) % static_cast<Index>(right_.size()))];
}

bool Configuration::is_zero() const noexcept {
  return left_.size() == 1 && left_[0] == 0 && head_.empty() && right_.size() == 1 && right_[0] == 0;
}

bool Configuration::is_number_like() const noexcept {
  return left_.size() == 1 && left_[0] == 0 && !is_zero();
}

Index left_edge(const Configuration& x) {
  if (!x.is_number_like()) throw Error(ErrorCode::NotNumberLike, "left_edge of a configuration that is not number-like");
  const auto& head = x.head();
  for (std::size_t k = 0; k < head.size(); ++k) {
    if (head[k] != 0) return x.anchor() + static_cast<Index>(k);
  }
  const auto& right = x.right_period();
  for (std::size_t k = 0; k < right.size(); ++k) {
    if (right[k] != 0) return x.anchor() + static_cast<Index>(head.size() + k);
  }
  throw Error(ErrorCode::NotNumberLike, "zero configuration");
}

Word window(const Configuration& x, Index i, Index j) {
  if (i > j) throw Error(ErrorCode::EmptyInterval, "window [" + std::to_string(i) + "," + std::to_string(j) + "]");
  std::vector<Symbol> out(static_cast<std::size_t>(j - i + 1));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = x.at(i + static_cast<Index>(k));
  return Word(x.alphabet(), std::move(out));
}

Configuration shift_by(const Configuration& x, Index k) {
  return Configuration(x.alphabet(), x.anchor() - k, x.left_period(), x.head(), x.right_period());
}

OneSidedSeq frac_of(const Configuration& x, Index c) {
  const Index head_end = x.anchor() + static_cast<Index>(x.head().size());
  if (c >= head_end) {
    const auto pr = static_cast<Index>(x.right_period().size());
    return OneSidedSeq(x.alphabet(), {}, rotate_left(x.right_period(), static_cast<std::size_t>((c - head_end) % pr)));
  }
  std::vector<Symbol> head;
  head.reserve(static_cast<std::size_t>(head_end - c));
  for (Index i = c; i < head_end; ++i) head.push_back(x.at(i));
  return OneSidedSeq(x.alphabet(), std::move(head), x.right_period());
}

// ---------------------------------------------------------------------------
// Literal format

std::string to_literal(const Configuration& x) {
  const int n = x.alphabet().size();
  std::string out = "[L:" + symbols_to_string(x.left_period(), n) + "] ";
  if (!x.head().empty()) out += symbols_to_string(x.head(), n) + " ";
  out += "[R:" + symbols_to_string(x.right_period(), n) + "] @" + std::to_string(x.anchor());
  return out;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, Alphabet alphabet) : text_(text), alphabet_(alphabet) {}

  Configuration parse() {
    skip_ws();
    expect("[L:");
    auto left = word_until(']');
    expect("]");
    skip_ws();
    const std::size_t head_start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '[') ++pos_;
    auto head = parse_symbols(text_.substr(head_start, pos_ - head_start), head_start);
    expect("[R:");
    auto right = word_until(']');
    expect("]");
    skip_ws();
    expect("@");
    const Index anchor = parse_int();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    if (left.empty()) fail("empty left period");
    if (right.empty()) fail("empty right period");
    return Configuration(alphabet_, anchor, std::move(left), std::move(head), std::move(right));
  }

  std::vector<Symbol> parse_symbols(std::string_view s, std::size_t offset) {
    std::vector<Symbol> out;
    if (alphabet_.size() <= 10) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        const char ch = s[k];
        if (ch == ' ' || ch == '\t') continue;
        if (ch < '0' || ch > '9' || !alphabet_.contains(ch - '0')) fail_at(offset + k, "bad symbol '" + std::string(1, ch) + "'");
        out.push_back(static_cast<Symbol>(ch - '0'));
      }
      return out;
    }
    std::size_t k = 0;
    auto at_space = [&] { return k < s.size() && (s[k] == ' ' || s[k] == '\t'); };
    while (at_space()) ++k;
    if (k == s.size()) return out;
    while (true) {
      while (at_space()) ++k;
      const std::size_t start = k;
      while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
      int v = -1;
      if (k == start || std::from_chars(s.data() + start, s.data() + k, v).ec != std::errc{} || !alphabet_.contains(v)) {
        fail_at(offset + start, "bad symbol");
      }
      out.push_back(static_cast<Symbol>(v));
      while (at_space()) ++k;
      if (k == s.size()) break;
      if (s[k] != ',') fail_at(offset + k, "expected ','");
      ++k;
    }
    return out;
  }

 private:
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw Error(ErrorCode::Parse, "1:" + std::to_string(pos + 1) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  std::vector<Symbol> word_until(char stop) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != stop) ++pos_;
    return parse_symbols(text_.substr(start, pos_ - start), start);
  }

  Index parse_int() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    Index v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) fail_at(start, "bad anchor");
    return v;
  }

  std::string_view text_;
  Alphabet alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Configuration parse_configuration(std::string_view text, Alphabet alphabet) {
  return LiteralParser(text, alphabet).parse();
}

std::vector<Symbol> parse_word(std::string_view text, Alphabet alphabet) {
  return LiteralParser(text, alphabet).parse_symbols(text, 0);
}

}  // namespace leftex
