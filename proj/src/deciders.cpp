#include "leftex/deciders.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>
#include <unordered_map>

namespace leftex {

void ExpansivityDims::validate() const {
  if (h < 0 || d < 0 || w < 1) {
    throw Error(ErrorCode::BadDims, "dims (h,d,w) need h,d >= 0 and w >= 1, got (" + std::to_string(h) + "," +
                                        std::to_string(d) + "," + std::to_string(w) + ")");
  }
}

const char* to_string(VerdictStatus s) noexcept {
  switch (s) {
    case VerdictStatus::True: return "True";
    case VerdictStatus::False: return "False";
    case VerdictStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* to_string(RapidVerdict v) noexcept {
  switch (v) {
    case RapidVerdict::Yes: return "Yes";
    case RapidVerdict::No: return "No";
    case RapidVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* to_string(SpeedBasis b) noexcept {
  switch (b) {
    case SpeedBasis::ExactFamily: return "ExactFamily";
    case SpeedBasis::Empirical: return "Empirical";
    case SpeedBasis::None: return "None";
  }
  return "None";
}

std::uint64_t budget_from_env() {
  if (const char* env = std::getenv("LEFTEX_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

bool is_left_permutive(const LocalRule& rule, int m, int n) {
  if (m < 1) throw Error(ErrorCode::BadDims, "left permutivity needs memory >= 1");
  const LocalRule r = rule.reexpress(m, n);
  const auto a = static_cast<std::size_t>(r.alphabet().size());
  const std::size_t stride = r.table_size() / a;
  std::vector<char> hit(a);
  for (std::size_t v = 0; v < stride; ++v) {
    std::fill(hit.begin(), hit.end(), 0);
    for (std::size_t lead = 0; lead < a; ++lead) {
      const Symbol out = r.lookup(lead * stride + v);
      if (hit[out]) return false;
      hit[out] = 1;
    }
  }
  return true;
}

int expansivity_seed_length(const LocalRule& rule, const ExpansivityDims& dims) {
  dims.validate();
  return (dims.w + 1) + (rule.memory() + rule.anticipation()) * (dims.h + dims.d);
}

RectangleReading read_rectangle(const Automaton& f, const ExpansivityDims& dims, const Word& seed) {
  const int rows = dims.h + dims.d + 1;
  const int m = f.rule().memory();
  if (static_cast<int>(seed.size()) != expansivity_seed_length(f.rule(), dims)) {
    throw Error(ErrorCode::InvalidArgument, "seed length does not match the rectangle geometry");
  }
  const SpaceTimePatch p = patch(f, seed, rows);
  // Seed covers absolute columns [0, L); row k starts at column k*m.
  const int det_col = (rows - 1) * m;
  RectangleReading out;
  for (int k = 0; k < rows; ++k) {
    for (int c = 0; c < dims.w; ++c) {
      out.contents.push_back(p.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(det_col + 1 + c - k * m)]);
    }
  }
  out.determined = p.rows[static_cast<std::size_t>(dims.h)][static_cast<std::size_t>(det_col - dims.h * m)];
  return out;
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct ClassEntry {
  std::uint64_t first;
  Symbol value;
  std::uint64_t first_diff = kNone;
};

template <typename Key>
struct PartitionResult {
  std::unordered_map<Key, ClassEntry> classes;
};

struct Geometry {
  int m;
  int n;
  int rows;
  int length;  // seed length L
  int w;
  int h;
  int det_col;
  std::size_t base;
};

// Enumerates seeds [lo, hi) in lexicographic order, recomputing only the part
// of the patch downstream of the odometer's leftmost changed position.
template <typename Key, typename MakeKey>
PartitionResult<Key> run_partition(const LocalRule& rule, const Geometry& g, std::uint64_t lo, std::uint64_t hi,
                                   MakeKey make_key) {
  PartitionResult<Key> result;
  if (lo >= hi) return result;
  const auto shrink = static_cast<std::size_t>(g.m + g.n);
  const auto window = shrink + 1;
  const std::size_t modulus = rule.table_size();

  std::vector<std::vector<Symbol>> rows(static_cast<std::size_t>(g.rows));
  for (int k = 0; k < g.rows; ++k) rows[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(g.length) - k * shrink);
  {
    std::uint64_t v = lo;
    for (int k = g.length - 1; k >= 0; --k) {
      rows[0][static_cast<std::size_t>(k)] = static_cast<Symbol>(v % g.base);
      v /= g.base;
    }
  }

  auto recompute = [&](std::size_t from_seed) {
    std::size_t from = from_seed;
    for (std::size_t k = 1; k < rows.size(); ++k) {
      from = from > shrink ? from - shrink : 0;
      const auto& prev = rows[k - 1];
      auto& cur = rows[k];
      std::size_t idx = 0;
      for (std::size_t j = 0; j + 1 < window; ++j) idx = idx * g.base + prev[from + j];
      for (std::size_t i = from; i < cur.size(); ++i) {
        idx = (idx * g.base) % modulus + prev[i + window - 1];
        cur[i] = rule.lookup(idx);
      }
    }
  };
  recompute(0);

  std::vector<Symbol> contents(static_cast<std::size_t>(g.rows * g.w));
  for (std::uint64_t seed = lo;;) {
    for (int k = 0, pos = 0; k < g.rows; ++k) {
      const auto& row = rows[static_cast<std::size_t>(k)];
      for (int c = 0; c < g.w; ++c) contents[static_cast<std::size_t>(pos++)] = row[static_cast<std::size_t>(g.det_col + 1 + c - k * g.m)];
    }
    const Symbol value = rows[static_cast<std::size_t>(g.h)][static_cast<std::size_t>(g.det_col - g.h * g.m)];
    auto [it, inserted] = result.classes.try_emplace(make_key(contents), ClassEntry{seed, value});
    if (!inserted && it->second.value != value && it->second.first_diff == kNone) {
      it->second.first_diff = seed;
      // Every later seed in this partition exceeds this conflict.
      return result;
    }
    if (++seed == hi) break;
    // Odometer increment, rightmost symbol fastest.
    int pos = g.length - 1;
    auto& row0 = rows[0];
    while (++row0[static_cast<std::size_t>(pos)] == g.base) {
      row0[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    recompute(static_cast<std::size_t>(pos));
  }
  return result;
}

struct Conflict {
  std::uint64_t seed_a = kNone;
  std::uint64_t seed_b = kNone;
};

template <typename Key>
Conflict merge_partitions(std::vector<PartitionResult<Key>>& parts) {
  std::unordered_map<Key, ClassEntry> global;
  Conflict best;
  for (auto& part : parts) {
    for (auto& [key, e] : part.classes) {
      auto it = global.find(key);
      std::uint64_t cand = kNone;
      std::uint64_t partner = kNone;
      if (it != global.end()) {
        partner = it->second.first;
        cand = e.value != it->second.value ? e.first : e.first_diff;
      } else {
        global.emplace(key, ClassEntry{e.first, e.value});
        partner = e.first;
        cand = e.first_diff;
      }
      if (cand < best.seed_b) {
        best.seed_b = cand;
        best.seed_a = partner;
      }
    }
  }
  return best;
}

Word decode_seed(std::uint64_t v, const Geometry& g, const Alphabet& a) {
  std::vector<Symbol> s(static_cast<std::size_t>(g.length));
  for (int k = g.length - 1; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] = static_cast<Symbol>(v % g.base);
    v /= g.base;
  }
  return Word(a, std::move(s));
}

template <typename Key, typename MakeKey>
Conflict enumerate(const LocalRule& rule, const Geometry& g, std::uint64_t seed_space, unsigned threads,
                   MakeKey make_key) {
  const std::uint64_t parts_n = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, seed_space));
  std::vector<PartitionResult<Key>> parts(parts_n);
  auto bound = [&](std::uint64_t k) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(seed_space) * k / parts_n);
  };
  if (parts_n == 1) {
    parts[0] = run_partition<Key>(rule, g, 0, seed_space, make_key);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t k = 0; k < parts_n; ++k) {
      pool.emplace_back([&, k] { parts[k] = run_partition<Key>(rule, g, bound(k), bound(k + 1), make_key); });
    }
    for (auto& t : pool) t.join();
  }
  return merge_partitions(parts);
}

}  // namespace

PropertyVerdict is_left_expansive(const Automaton& f, const ExpansivityDims& dims, const DeciderLimits& limits) {
  dims.validate();
  const LocalRule& rule = f.rule();
  Geometry g{};
  g.m = rule.memory();
  g.n = rule.anticipation();
  g.rows = dims.h + dims.d + 1;
  g.length = expansivity_seed_length(rule, dims);
  g.w = dims.w;
  g.h = dims.h;
  g.det_col = (g.rows - 1) * g.m;
  g.base = static_cast<std::size_t>(rule.alphabet().size());

  PropertyVerdict verdict;
  verdict.property = "left_expansive";
  verdict.dims = dims;

  // |A|^L and the evaluation cost, saturating.
  unsigned __int128 space = 1;
  bool overflow = false;
  for (int k = 0; k < g.length && !overflow; ++k) {
    space *= g.base;
    overflow = space > std::numeric_limits<std::uint64_t>::max() / 2;
  }
  unsigned __int128 cells = 0;
  for (int k = 1; k < g.rows; ++k) cells += static_cast<unsigned>(g.length - k * (g.m + g.n));
  const unsigned __int128 cost = space * std::max<unsigned __int128>(cells, 1);
  if (overflow || cost > limits.budget) {
    verdict.status = VerdictStatus::Unknown;
    verdict.seed_space = overflow ? 0 : static_cast<std::uint64_t>(space);
    verdict.resource_report = "ResourceExceeded: " + std::to_string(rule.alphabet().size()) + "^" +
                              std::to_string(g.length) + " seeds" +
                              (overflow ? std::string(" (overflows 64 bits)")
                                        : " need ~" + std::to_string(static_cast<std::uint64_t>(cost)) +
                                              " table evaluations") +
                              ", budget " + std::to_string(limits.budget);
    return verdict;
  }
  const auto seed_space = static_cast<std::uint64_t>(space);
  verdict.seed_space = seed_space;

  unsigned __int128 key_space = 1;
  bool key_fits = true;
  for (int k = 0; k < g.rows * g.w && key_fits; ++k) {
    key_space *= g.base;
    key_fits = key_space <= std::numeric_limits<std::uint64_t>::max();
  }
  const unsigned threads = std::max(1u, limits.threads);
  Conflict conflict;
  if (key_fits) {
    conflict = enumerate<std::uint64_t>(rule, g, seed_space, threads, [base = g.base](const std::vector<Symbol>& c) {
      std::uint64_t key = 0;
      for (Symbol s : c) key = key * base + s;
      return key;
    });
  } else {
    conflict = enumerate<std::string>(rule, g, seed_space, threads, [](const std::vector<Symbol>& c) {
      std::string key(c.size() * 2, '\0');
      for (std::size_t k = 0; k < c.size(); ++k) {
        key[2 * k] = static_cast<char>(c[k] >> 8);
        key[2 * k + 1] = static_cast<char>(c[k] & 0xff);
      }
      return key;
    });
  }

  if (conflict.seed_b == kNone) {
    verdict.status = VerdictStatus::True;
    verdict.seeds_checked = seed_space;
    return verdict;
  }
  verdict.status = VerdictStatus::False;
  verdict.seeds_checked = conflict.seed_b + 1;
  Word a = decode_seed(conflict.seed_a, g, rule.alphabet());
  Word b = decode_seed(conflict.seed_b, g, rule.alphabet());
  const RectangleReading ra = read_rectangle(f, dims, a);
  const RectangleReading rb = read_rectangle(f, dims, b);
  verdict.counterexample = Counterexample{std::move(a), std::move(b), ra.contents, ra.determined, rb.determined};
  return verdict;
}

DimsSearch find_left_expansive_dims(const Automaton& f, int max_h, int max_d, int max_w,
                                    const DeciderLimits& limits) {
  DimsSearch out;
  if (max_h < 0 || max_d < 0 || max_w < 1) return out;
  for (int total = 1; total <= max_h + max_d + max_w; ++total) {
    for (int h = 0; h <= max_h; ++h) {
      for (int d = 0; d <= max_d; ++d) {
        const int w = total - h - d;
        if (w < 1 || w > max_w) continue;
        const ExpansivityDims dims{h, d, w};
        const PropertyVerdict v = is_left_expansive(f, dims, limits);
        ++out.candidates_checked;
        if (v.status == VerdictStatus::True) {
          out.dims = dims;
          return out;
        }
        if (v.status == VerdictStatus::Unknown) out.budget_exhausted = true;
      }
    }
  }
  return out;
}

bool is_eca(const LocalRule& rule) {
  if (rule.alphabet().size() != 2) return false;
  try {
    (void)rule.reexpress(1, 1);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_left_spreading_eca(const LocalRule& rule) {
  if (!is_eca(rule)) throw Error(ErrorCode::NotECA, "rule is not a binary (1,1) rule");
  return rule.reexpress(1, 1).lookup(1) == 1;
}

bool is_zero_quiescent(const LocalRule& rule) { return rule.lookup(0) == 0; }

bool SpreadingEvidence::all_witnessed() const {
  return std::all_of(witness.begin(), witness.end(), [](const auto& w) { return w.has_value(); });
}

namespace {

void require_quiescent(const Automaton& f) {
  if (!is_zero_quiescent(f.rule())) throw Error(ErrorCode::ZeroNotQuiescent, "f(0,...,0) != 0");
}

}  // namespace

SpreadingEvidence empirical_left_spreading(const Automaton& f, const std::vector<Configuration>& samples,
                                           std::int64_t horizon) {
  require_quiescent(f);
  SpreadingEvidence out;
  for (const Configuration& x : samples) {
    const Index start = left_edge(x);
    std::optional<std::int64_t> found;
    Configuration y = x;
    for (std::int64_t t = 1; t <= horizon; ++t) {
      y = apply(f, y);
      if (y.is_zero()) break;
      if (left_edge(y) < start) {
        found = t;
        break;
      }
    }
    out.witness.push_back(found);
  }
  return out;
}

SpeedEstimate estimate_spreading_speed(const Automaton& f, const std::vector<Configuration>& samples,
                                       std::int64_t horizon) {
  require_quiescent(f);
  if (horizon < 1) throw Error(ErrorCode::InvalidArgument, "horizon must be >= 1");
  if (samples.empty()) throw Error(ErrorCode::InvalidArgument, "no samples");
  SpeedEstimate out;
  out.samples = samples.size();
  out.horizon = horizon;
  const std::int64_t from = (horizon + 1) / 2;
  for (const Configuration& x : samples) {
    const Index start = left_edge(x);
    std::optional<mpq_class> best;
    Configuration y = x;
    for (std::int64_t t = 1; t <= horizon; ++t) {
      y = apply(f, y);
      if (y.is_zero()) break;
      if (t < from) continue;
      mpq_class ratio(mpz_class(static_cast<long>(start - left_edge(y))), mpz_class(static_cast<long>(t)));
      ratio.canonicalize();
      if (!best || ratio > *best) best = ratio;
    }
    out.per_sample.push_back(best);
    if (best && (!out.s_hat || *best > *out.s_hat)) out.s_hat = best;
  }
  return out;
}

RapidClassification classify_rapid(const Automaton& f, const RapidSearchBounds& bounds, const DeciderLimits& limits) {
  RapidClassification out;
  const LocalRule& rule = f.rule();
  const DimsSearch search = find_left_expansive_dims(f, bounds.max_h, bounds.max_d, bounds.max_w, limits);
  out.dims = search.dims;

  if (!is_zero_quiescent(rule)) {
    out.verdict = RapidVerdict::No;
    out.reason = "F(0^Z) != 0^Z, so F is not left spreading";
    return out;
  }
  const bool eca = is_eca(rule);
  if (eca && !is_left_spreading_eca(rule)) {
    out.verdict = RapidVerdict::No;
    out.reason = "elementary rule with f(001) = 0 is not left spreading";
    return out;
  }
  if (!search.dims) {
    out.reason = search.budget_exhausted ? "no left expansive dims proved within bounds (budget exhausted)"
                                         : "no left expansive dims within search bounds";
    return out;
  }
  const ExpansivityDims dims = *search.dims;

  if (f.family() && f.family()->fractional) {
    // Spreading speed log_pq(p/q) < 1/h  <=>  p^h < pq * q^h.
    const auto [p, q, fractional] = *f.family();
    mpz_class lhs;
    mpz_class rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(dims.h));
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(dims.h));
    rhs *= p * q;
    out.speed_basis = SpeedBasis::ExactFamily;
    if (dims.h == 0 || lhs < rhs) {
      out.verdict = RapidVerdict::Yes;
      out.reason = "fractional multiplication automaton: speed log_pq(p/q) < 1/h";
    } else {
      out.reason = "fractional multiplication automaton but speed is not below 1/h for the dims found";
    }
    return out;
  }

  if (dims.h == 0) {
    if (eca) {
      out.verdict = RapidVerdict::Yes;
      out.speed_basis = SpeedBasis::ExactFamily;
      out.reason = "h = 0 and the elementary rule maps 001 to 1";
      return out;
    }
    std::vector<Configuration> samples;
    for (int s = 1; s < rule.alphabet().size(); ++s) {
      samples.push_back(Configuration::single(rule.alphabet(), 0, static_cast<Symbol>(s)));
    }
    if (empirical_left_spreading(f, samples, 64).all_witnessed()) {
      out.verdict = RapidVerdict::Yes;
      out.speed_basis = SpeedBasis::Empirical;
      out.reason = "h = 0 and every single-symbol seed spreads left";
    } else {
      out.reason = "h = 0 but left spreading was not witnessed";
    }
    return out;
  }

  if (eca) {
    out.verdict = RapidVerdict::No;
    out.speed_basis = SpeedBasis::ExactFamily;
    out.reason = "elementary rule spreads at speed 1, not below 1/h for h >= 1 (no h = 0 dims within bounds)";
    return out;
  }
  out.reason = "h >= 1 and no exact spreading speed is known for this rule";
  return out;
}

}  // namespace leftex
