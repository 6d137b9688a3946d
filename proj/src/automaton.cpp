#include "leftex/automaton.hpp"

namespace leftex {

namespace {

std::size_t checked_table_size(const Alphabet& a, int window, std::size_t max_entries) {
  std::size_t size = 1;
  for (int k = 0; k < window; ++k) {
    if (size > max_entries / static_cast<std::size_t>(a.size())) {
      throw Error(ErrorCode::TableTooLarge, "table for alphabet " + std::to_string(a.size()) + " and window " +
                                                std::to_string(window) + " exceeds " + std::to_string(max_entries) +
                                                " entries");
    }
    size *= static_cast<std::size_t>(a.size());
  }
  return size;
}

void check_dims(int memory, int anticipation) {
  if (memory < 0 || anticipation < 0) throw Error(ErrorCode::InvalidArgument, "memory and anticipation must be >= 0");
}

}  // namespace

LocalRule::LocalRule(Alphabet alphabet, int memory, int anticipation, std::vector<Symbol> table,
                     std::size_t max_entries)
    : alphabet_(alphabet), memory_(memory), anticipation_(anticipation), table_(std::move(table)) {
  check_dims(memory, anticipation);
  const std::size_t expected = checked_table_size(alphabet_, window_size(), max_entries);
  if (table_.size() != expected) {
    throw Error(ErrorCode::IncompleteTable,
                "expected " + std::to_string(expected) + " entries, got " + std::to_string(table_.size()));
  }
  for (Symbol s : table_) {
    if (!alphabet_.contains(s)) throw Error(ErrorCode::SymbolOutOfRange, "table output " + std::to_string(s));
  }
}

LocalRule LocalRule::from_function(Alphabet alphabet, int memory, int anticipation,
                                   const std::function<Symbol(std::span<const Symbol>)>& f, std::size_t max_entries) {
  check_dims(memory, anticipation);
  const int w = memory + anticipation + 1;
  const std::size_t size = checked_table_size(alphabet, w, max_entries);
  std::vector<Symbol> table(size);
  std::vector<Symbol> nb(static_cast<std::size_t>(w), 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    table[idx] = f(nb);
    // Increment the neighborhood as a base-|A| counter, rightmost fastest.
    for (int k = w - 1; k >= 0; --k) {
      auto& digit = nb[static_cast<std::size_t>(k)];
      if (++digit < alphabet.size()) break;
      digit = 0;
    }
  }
  return LocalRule(alphabet, memory, anticipation, std::move(table), max_entries);
}

std::size_t LocalRule::index_of(std::span<const Symbol> neighborhood) const {
  if (neighborhood.size() != static_cast<std::size_t>(window_size())) {
    throw Error(ErrorCode::InvalidArgument, "neighborhood length " + std::to_string(neighborhood.size()));
  }
  std::size_t idx = 0;
  for (Symbol s : neighborhood) idx = idx * static_cast<std::size_t>(alphabet_.size()) + s;
  return idx;
}

std::vector<Symbol> LocalRule::neighborhood_of(std::size_t index) const {
  std::vector<Symbol> nb(static_cast<std::size_t>(window_size()));
  const auto a = static_cast<std::size_t>(alphabet_.size());
  for (auto k = nb.size(); k-- > 0;) {
    nb[k] = static_cast<Symbol>(index % a);
    index /= a;
  }
  return nb;
}

bool LocalRule::depends_on_first() const {
  const std::size_t stride = table_.size() / static_cast<std::size_t>(alphabet_.size());
  for (std::size_t rest = 0; rest < stride; ++rest) {
    for (std::size_t lead = 1; lead < static_cast<std::size_t>(alphabet_.size()); ++lead) {
      if (table_[lead * stride + rest] != table_[rest]) return true;
    }
  }
  return false;
}

bool LocalRule::depends_on_last() const {
  const auto a = static_cast<std::size_t>(alphabet_.size());
  for (std::size_t base = 0; base < table_.size(); base += a) {
    for (std::size_t last = 1; last < a; ++last) {
      if (table_[base + last] != table_[base]) return true;
    }
  }
  return false;
}

LocalRule LocalRule::trimmed() const {
  LocalRule r = *this;
  while (r.memory_ > 0 && !r.depends_on_first()) r = r.reexpress(r.memory_ - 1, r.anticipation_);
  while (r.anticipation_ > 0 && !r.depends_on_last()) r = r.reexpress(r.memory_, r.anticipation_ - 1);
  return r;
}

LocalRule LocalRule::reexpress(int memory, int anticipation) const {
  check_dims(memory, anticipation);
  const auto a = static_cast<std::size_t>(alphabet_.size());
  LocalRule r = *this;
  while (r.memory_ > memory) {
    if (r.depends_on_first()) {
      throw Error(ErrorCode::IncompatibleRule, "rule depends on its leftmost position; cannot reduce memory to " +
                                                   std::to_string(memory));
    }
    std::vector<Symbol> t(r.table_.begin(), r.table_.begin() + static_cast<std::ptrdiff_t>(r.table_.size() / a));
    r.table_ = std::move(t);
    --r.memory_;
  }
  while (r.anticipation_ > anticipation) {
    if (r.depends_on_last()) {
      throw Error(ErrorCode::IncompatibleRule, "rule depends on its rightmost position; cannot reduce anticipation to " +
                                                   std::to_string(anticipation));
    }
    std::vector<Symbol> t(r.table_.size() / a);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = r.table_[k * a];
    r.table_ = std::move(t);
    --r.anticipation_;
  }
  if (r.memory_ < memory || r.anticipation_ < anticipation) {
    const int extra_right = anticipation - r.anticipation_;
    const int w = memory + anticipation + 1;
    const std::size_t size = checked_table_size(alphabet_, w, kDefaultMaxTableEntries);
    std::size_t right_div = 1;
    for (int k = 0; k < extra_right; ++k) right_div *= a;
    const std::size_t inner = r.table_.size();
    std::vector<Symbol> t(size);
    for (std::size_t idx = 0; idx < size; ++idx) t[idx] = r.table_[(idx / right_div) % inner];
    r.table_ = std::move(t);
    r.memory_ = memory;
    r.anticipation_ = anticipation;
  }
  return r;
}

LocalRule make_rule(Alphabet alphabet, int memory, int anticipation,
                    const std::map<std::vector<Symbol>, Symbol>& entries) {
  check_dims(memory, anticipation);
  const auto w = static_cast<std::size_t>(memory + anticipation + 1);
  const std::size_t size = checked_table_size(alphabet, static_cast<int>(w), kDefaultMaxTableEntries);
  std::vector<Symbol> table(size);
  std::vector<bool> seen(size, false);
  for (const auto& [nb, out] : entries) {
    if (nb.size() != w) throw Error(ErrorCode::InvalidArgument, "neighborhood of length " + std::to_string(nb.size()));
    std::size_t idx = 0;
    for (Symbol s : nb) {
      if (!alphabet.contains(s)) throw Error(ErrorCode::SymbolOutOfRange, "neighborhood symbol " + std::to_string(s));
      idx = idx * static_cast<std::size_t>(alphabet.size()) + s;
    }
    table[idx] = out;
    seen[idx] = true;
  }
  for (std::size_t idx = 0; idx < size; ++idx) {
    if (!seen[idx]) throw Error(ErrorCode::IncompleteTable, "missing neighborhood #" + std::to_string(idx));
  }
  return LocalRule(alphabet, memory, anticipation, std::move(table));
}

LocalRule eca_rule(int number) {
  if (number < 0 || number > 255) throw Error(ErrorCode::OutOfRange, "ECA number " + std::to_string(number));
  std::vector<Symbol> table(8);
  for (int idx = 0; idx < 8; ++idx) table[static_cast<std::size_t>(idx)] = static_cast<Symbol>((number >> idx) & 1);
  return LocalRule(Alphabet(2), 1, 1, std::move(table));
}

LocalRule shift_rule(Alphabet alphabet) {
  return LocalRule::from_function(alphabet, 0, 1, [](std::span<const Symbol> v) { return v[1]; });
}

LocalRule inverse_shift_rule(Alphabet alphabet) {
  return LocalRule::from_function(alphabet, 1, 0, [](std::span<const Symbol> v) { return v[0]; });
}

LocalRule identity_rule(Alphabet alphabet) {
  return LocalRule::from_function(alphabet, 0, 0, [](std::span<const Symbol> v) { return v[0]; });
}

// ---------------------------------------------------------------------------

Configuration apply(const LocalRule& f, const Configuration& x) {
  if (f.alphabet() != x.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "rule and configuration alphabets differ");
  const Index m = f.memory();
  const Index n = f.anticipation();
  const Index a = x.anchor();
  const auto pl = static_cast<Index>(x.left_period().size());
  const auto pr = static_cast<Index>(x.right_period().size());
  const auto h = static_cast<Index>(x.head().size());

  // Output cells [out_lo, out_hi]: one left period, the widened head, one right period.
  const Index out_lo = a - n - pl;
  const Index out_hi = a + h + m + pr - 1;
  const Index in_lo = out_lo - m;
  const Index in_hi = out_hi + n;

  std::vector<Symbol> in(static_cast<std::size_t>(in_hi - in_lo + 1));
  for (std::size_t k = 0; k < in.size(); ++k) in[k] = x.at(in_lo + static_cast<Index>(k));

  const auto w = static_cast<std::size_t>(f.window_size());
  const auto base = static_cast<std::size_t>(f.alphabet().size());
  const std::size_t modulus = f.table_size();
  std::vector<Symbol> out(static_cast<std::size_t>(out_hi - out_lo + 1));
  std::size_t idx = 0;
  for (std::size_t k = 0; k + 1 < w; ++k) idx = idx * base + in[k];
  for (std::size_t k = 0; k < out.size(); ++k) {
    idx = (idx * base) % modulus + in[k + w - 1];
    out[k] = f.lookup(idx);
  }

  const auto split1 = static_cast<std::ptrdiff_t>(pl);
  const auto split2 = static_cast<std::ptrdiff_t>(pl + h + m + n);
  return Configuration(x.alphabet(), a - n, std::vector<Symbol>(out.begin(), out.begin() + split1),
                       std::vector<Symbol>(out.begin() + split1, out.begin() + split2),
                       std::vector<Symbol>(out.begin() + split2, out.end()));
}

Configuration apply(const Automaton& f, const Configuration& x) { return apply(f.rule(), x); }

Configuration iterate(const Automaton& f, Configuration x, std::int64_t steps) {
  for (std::int64_t t = 0; t < steps; ++t) x = apply(f, x);
  return x;
}

Automaton compose(const Automaton& f, const Automaton& g, std::size_t max_entries) {
  const LocalRule& rf = f.rule();
  const LocalRule& rg = g.rule();
  if (rf.alphabet() != rg.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "compose over different alphabets");
  const int m = rf.memory() + rg.memory();
  const int n = rf.anticipation() + rg.anticipation();
  const auto wf = static_cast<std::size_t>(rf.window_size());
  const auto wg = static_cast<std::size_t>(rg.window_size());
  std::vector<Symbol> inner(wf);
  LocalRule composed = LocalRule::from_function(
      rf.alphabet(), m, n,
      [&](std::span<const Symbol> u) {
        for (std::size_t k = 0; k < wf; ++k) inner[k] = rg(u.subspan(k, wg));
        return rf(inner);
      },
      max_entries);
  std::string label = f.label().empty() || g.label().empty() ? std::string{} : "(" + f.label() + " o " + g.label() + ")";
  return Automaton(composed.trimmed(), std::move(label));
}

std::vector<Word> trace(const Automaton& f, const Configuration& x, Index i, Index j, std::int64_t horizon) {
  if (i > j) throw Error(ErrorCode::EmptyInterval, "trace interval [" + std::to_string(i) + "," + std::to_string(j) + "]");
  if (horizon < 1) throw Error(ErrorCode::InvalidArgument, "horizon must be >= 1");
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(horizon));
  Configuration y = x;
  for (std::int64_t t = 0; t < horizon; ++t) {
    if (t > 0) y = apply(f, y);
    out.push_back(window(y, i, j));
  }
  return out;
}

SpaceTimePatch patch(const Automaton& f, const Word& seed, int rows) {
  const LocalRule& r = f.rule();
  if (seed.alphabet() != r.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "seed alphabet differs from rule");
  if (rows < 1) throw Error(ErrorCode::InvalidArgument, "rows must be >= 1");
  const auto shrink = static_cast<std::size_t>(r.memory() + r.anticipation());
  if (seed.size() < static_cast<std::size_t>(rows - 1) * shrink + 1) {
    throw Error(ErrorCode::SeedTooShort, "seed of length " + std::to_string(seed.size()) + " for " +
                                             std::to_string(rows) + " rows");
  }
  SpaceTimePatch out;
  out.rows.push_back(seed);
  const auto w = static_cast<std::size_t>(r.window_size());
  for (int k = 1; k < rows; ++k) {
    const auto prev = out.rows.back().symbols();
    std::vector<Symbol> next(prev.size() - shrink);
    for (std::size_t c = 0; c < next.size(); ++c) next[c] = r(prev.subspan(c, w));
    out.rows.emplace_back(r.alphabet(), std::move(next));
  }
  return out;
}

}  // namespace leftex
