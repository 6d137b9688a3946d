#include "leftex/leftex.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "leftex/io.hpp"
#include "leftex/render.hpp"

struct leftex_rule {
  leftex::Automaton automaton;
};

struct leftex_config {
  leftex::Configuration value;
};

namespace {

thread_local std::string last_error;

leftex_status fail(leftex_status s, const char* what) {
  last_error = what;
  return s;
}

template <typename Fn>
leftex_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return LEFTEX_OK;
  } catch (const leftex::Error& e) {
    return fail(static_cast<leftex_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LEFTEX_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LEFTEX_E_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw leftex::Error(leftex::ErrorCode::InvalidArgument, what);
}

leftex::DeciderLimits to_limits(const leftex_limits* l) {
  leftex::DeciderLimits out;
  out.budget = (l != nullptr && l->budget != 0) ? l->budget : leftex::budget_from_env();
  out.threads = (l != nullptr && l->threads != 0) ? l->threads : 1;
  return out;
}

leftex_verdict from_status(leftex::VerdictStatus s) {
  switch (s) {
    case leftex::VerdictStatus::True: return LEFTEX_TRUE;
    case leftex::VerdictStatus::False: return LEFTEX_FALSE;
    case leftex::VerdictStatus::Unknown: break;
  }
  return LEFTEX_UNKNOWN;
}

leftex::RenderSpec to_spec(const leftex_render_options* o) {
  require(o != nullptr, "null render options");
  leftex::RenderSpec spec;
  spec.rows = o->rows;
  spec.col_lo = o->col_lo;
  spec.col_hi = o->col_hi;
  switch (o->format) {
    case LEFTEX_ASCII: spec.format = leftex::RenderFormat::Ascii; break;
    case LEFTEX_PBM: spec.format = leftex::RenderFormat::Pbm; break;
    case LEFTEX_PGM: spec.format = leftex::RenderFormat::Pgm; break;
    default: throw leftex::Error(leftex::ErrorCode::InvalidArgument, "unknown render format");
  }
  if (o->maxval != 0) spec.maxval = o->maxval;
  if (o->palette != nullptr) spec.palette.assign(o->palette, o->palette + o->palette_size);
  spec.binarize = o->binarize != 0;
  return spec;
}

}  // namespace

extern "C" {

const char* leftex_last_error(void) { return last_error.c_str(); }

const char* leftex_status_name(leftex_status status) {
  if (status == LEFTEX_OK) return "OK";
  if (status == LEFTEX_E_INTERNAL) return "Internal";
  return leftex::error_code_name(static_cast<leftex::ErrorCode>(status));
}

void leftex_string_free(char* s) { std::free(s); }

leftex_status leftex_rule_parse(const char* text, leftex_rule** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new leftex_rule{leftex::parse_rule_argument(text)};
  });
}

void leftex_rule_free(leftex_rule* rule) { delete rule; }

int leftex_rule_alphabet(const leftex_rule* rule) { return rule == nullptr ? 0 : rule->automaton.alphabet().size(); }

leftex_status leftex_rule_to_json(const leftex_rule* rule, char** out) {
  return guarded([&] {
    require(rule != nullptr && out != nullptr, "null argument");
    *out = dup_string(leftex::rule_to_json(rule->automaton.rule()).dump() + "\n");
  });
}

leftex_status leftex_rule_compose(const leftex_rule* f, const leftex_rule* g, leftex_rule** out) {
  return guarded([&] {
    require(f != nullptr && g != nullptr && out != nullptr, "null argument");
    *out = new leftex_rule{leftex::compose(f->automaton, g->automaton)};
  });
}

leftex_status leftex_config_parse(const char* text, int alphabet_size, leftex_config** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new leftex_config{leftex::parse_configuration_argument(text, leftex::Alphabet(alphabet_size))};
  });
}

leftex_status leftex_config_from_rational(const char* rational, int base, leftex_config** out) {
  return guarded([&] {
    require(rational != nullptr && out != nullptr, "null argument");
    *out = new leftex_config{leftex::config_n(leftex::PositiveRational::parse(rational), base)};
  });
}

void leftex_config_free(leftex_config* config) { delete config; }

leftex_status leftex_config_to_string(const leftex_config* config, char** out) {
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    *out = dup_string(leftex::to_literal(config->value));
  });
}

leftex_status leftex_config_window(const leftex_config* config, int64_t i, int64_t j, char** out) {
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    *out = dup_string(leftex::window(config->value, i, j).to_string());
  });
}

leftex_status leftex_config_left_edge(const leftex_config* config, int64_t* out) {
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    *out = leftex::left_edge(config->value);
  });
}

leftex_status leftex_config_real(const leftex_config* config, char** out) {
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    *out = dup_string(leftex::real_n(config->value, config->value.alphabet().size()).to_string());
  });
}

leftex_status leftex_apply(const leftex_rule* rule, const leftex_config* x, leftex_config** out) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && out != nullptr, "null argument");
    *out = new leftex_config{leftex::apply(rule->automaton, x->value)};
  });
}

leftex_status leftex_iterate(const leftex_rule* rule, const leftex_config* x, int64_t steps, leftex_config** out) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && out != nullptr, "null argument");
    *out = new leftex_config{leftex::iterate(rule->automaton, x->value, steps)};
  });
}

leftex_status leftex_simulate(const leftex_rule* rule, const leftex_config* x, int64_t steps, char** out) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && out != nullptr, "null argument");
    require(steps >= 0, "steps must be >= 0");
    std::string text;
    leftex::Configuration y = x->value;
    for (int64_t t = 0; t <= steps; ++t) {
      if (t > 0) y = leftex::apply(rule->automaton, y);
      text += leftex::to_literal(y);
      text += '\n';
    }
    *out = dup_string(text);
  });
}

leftex_status leftex_render(const leftex_rule* rule, const leftex_config* x, const leftex_render_options* options,
                            char** out) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && out != nullptr, "null argument");
    *out = dup_string(leftex::render(rule->automaton, x->value, to_spec(options)));
  });
}

leftex_status leftex_render_file(const leftex_rule* rule, const leftex_config* x, const leftex_render_options* options,
                                 const char* path) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && path != nullptr, "null argument");
    const leftex::RenderSpec spec = to_spec(options);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw leftex::Error(leftex::ErrorCode::Io, std::string("cannot open '") + path + "' for writing");
    leftex::render(file, rule->automaton, x->value, spec);
    if (!file) throw leftex::Error(leftex::ErrorCode::Io, std::string("write to '") + path + "' failed");
  });
}

leftex_status leftex_atlas(const leftex_limits* limits, int as_json, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto rows = leftex::eca_atlas(to_limits(limits));
    *out = dup_string(as_json ? leftex::atlas_json(rows) : leftex::atlas_csv(rows));
  });
}

leftex_status leftex_verify_mul(int p, int q, const char* xi, int steps, leftex_verdict* out) {
  return guarded([&] {
    require(xi != nullptr && out != nullptr, "null argument");
    const leftex::MulSpec spec{p, q};
    *out = leftex::verify_mul(spec, leftex::PositiveRational::parse(xi), steps) ? LEFTEX_TRUE : LEFTEX_FALSE;
  });
}

leftex_status leftex_left_permutive(const leftex_rule* rule, int m, int n, leftex_verdict* out) {
  return guarded([&] {
    require(rule != nullptr && out != nullptr, "null argument");
    *out = leftex::is_left_permutive(rule->automaton.rule(), m, n) ? LEFTEX_TRUE : LEFTEX_FALSE;
  });
}

leftex_status leftex_expansive(const leftex_rule* rule, int h, int d, int w, const leftex_limits* limits,
                               leftex_verdict* verdict, char** json) {
  return guarded([&] {
    require(rule != nullptr && verdict != nullptr, "null argument");
    const auto v = leftex::is_left_expansive(rule->automaton, leftex::ExpansivityDims{h, d, w}, to_limits(limits));
    *verdict = from_status(v.status);
    if (json != nullptr) *json = dup_string(leftex::to_json(v).dump());
  });
}

leftex_status leftex_find_dims(const leftex_rule* rule, int max_h, int max_d, int max_w, const leftex_limits* limits,
                               leftex_verdict* verdict, char** json) {
  return guarded([&] {
    require(rule != nullptr && verdict != nullptr, "null argument");
    const auto s = leftex::find_left_expansive_dims(rule->automaton, max_h, max_d, max_w, to_limits(limits));
    *verdict = s.dims ? LEFTEX_TRUE : (s.budget_exhausted ? LEFTEX_UNKNOWN : LEFTEX_FALSE);
    if (json != nullptr) {
      nlohmann::json j{{"property", "left_expansive_dims"},
                       {"status", s.dims ? "True" : (s.budget_exhausted ? "Unknown" : "False")},
                       {"candidates_checked", s.candidates_checked},
                       {"bounds", {max_h, max_d, max_w}}};
      j["dims"] = s.dims ? nlohmann::json{s.dims->h, s.dims->d, s.dims->w} : nlohmann::json(nullptr);
      *json = dup_string(j.dump());
    }
  });
}

leftex_status leftex_classify(const leftex_rule* rule, int max_h, int max_d, int max_w, const leftex_limits* limits,
                              leftex_verdict* verdict, char** json) {
  return guarded([&] {
    require(rule != nullptr && verdict != nullptr, "null argument");
    const auto c = leftex::classify_rapid(rule->automaton, leftex::RapidSearchBounds{max_h, max_d, max_w},
                                          to_limits(limits));
    switch (c.verdict) {
      case leftex::RapidVerdict::Yes: *verdict = LEFTEX_TRUE; break;
      case leftex::RapidVerdict::No: *verdict = LEFTEX_FALSE; break;
      case leftex::RapidVerdict::Unknown: *verdict = LEFTEX_UNKNOWN; break;
    }
    if (json != nullptr) *json = dup_string(leftex::to_json(c).dump());
  });
}

leftex_status leftex_speed(const leftex_rule* rule, const leftex_config* const* samples, size_t count, int64_t horizon,
                           char** json) {
  return guarded([&] {
    require(rule != nullptr && json != nullptr && (samples != nullptr || count == 0), "null argument");
    std::vector<leftex::Configuration> xs;
    for (size_t k = 0; k < count; ++k) {
      require(samples[k] != nullptr, "null sample");
      xs.push_back(samples[k]->value);
    }
    *json = dup_string(leftex::to_json(leftex::estimate_spreading_speed(rule->automaton, xs, horizon)).dump());
  });
}

leftex_status leftex_scan_period(const leftex_rule* rule, const leftex_config* x, int64_t i, int64_t j,
                                 int64_t horizon, int64_t max_c, int64_t max_p, leftex_verdict* verdict, char** json) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && verdict != nullptr, "null argument");
    const auto r = leftex::aperiodicity_scan(rule->automaton, x->value, i, j, horizon, max_c, max_p);
    *verdict = r.period ? LEFTEX_TRUE : LEFTEX_FALSE;
    if (json != nullptr) *json = dup_string(leftex::to_json(r).dump());
  });
}

leftex_status leftex_trace_complexity(const leftex_rule* rule, const leftex_config* x, int64_t i, int64_t j,
                                      int64_t horizon, size_t max_k, uint64_t* complexity) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && (complexity != nullptr || max_k == 0), "null argument");
    const auto ids = leftex::intern_words(leftex::trace(rule->automaton, x->value, i, j, horizon));
    for (size_t k = 1; k <= max_k; ++k) complexity[k - 1] = leftex::subword_complexity(ids, k);
  });
}

leftex_status leftex_recur(const leftex_rule* rule, const leftex_config* x, int64_t c, int64_t horizon,
                           leftex_verdict* verdict, char** json) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && verdict != nullptr, "null argument");
    const auto hits = leftex::recurrence_scan(rule->automaton, x->value, c, horizon);
    *verdict = hits.empty() ? LEFTEX_TRUE : LEFTEX_FALSE;
    if (json != nullptr) {
      nlohmann::json j{{"column", c}, {"horizon", horizon}, {"count", hits.size()}, {"hits", hits}};
      *json = dup_string(j.dump());
    }
  });
}

leftex_status leftex_limits_census(const leftex_rule* rule, const leftex_config* x, int64_t c, int64_t horizon,
                                   const int* lengths, size_t count, int as_json, char** out) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && out != nullptr && (lengths != nullptr || count == 0), "null argument");
    const auto rows = leftex::limit_census(rule->automaton, x->value, c, horizon, std::span<const int>(lengths, count));
    if (!as_json) {
      *out = dup_string(leftex::census_csv(rows));
      return;
    }
    bool monotone = true;
    bool strict = true;
    nlohmann::json table = nlohmann::json::array();
    for (size_t k = 0; k < rows.size(); ++k) {
      table.push_back({{"n", rows[k].n}, {"census", rows[k].census}});
      if (k > 0 && rows[k].n > rows[k - 1].n) {
        monotone = monotone && rows[k].census >= rows[k - 1].census;
        strict = strict && rows[k].census > rows[k - 1].census;
      }
    }
    nlohmann::json j{{"column", c},
                     {"horizon", horizon},
                     {"rows", table},
                     {"monotone", monotone},
                     {"strictly_increasing", strict}};
    *out = dup_string(j.dump());
  });
}

leftex_status leftex_propagation(const leftex_rule* rule, int h, int d, int w, const leftex_config* x, int64_t i,
                                 int64_t preperiod, int64_t period, int64_t horizon, const leftex_limits* limits,
                                 leftex_verdict* out) {
  return guarded([&] {
    require(rule != nullptr && x != nullptr && out != nullptr, "null argument");
    const leftex::PeriodCertificate cert{preperiod, period, horizon};
    const bool ok = leftex::propagation_check(rule->automaton, leftex::ExpansivityDims{h, d, w}, x->value, i, cert,
                                              horizon, to_limits(limits));
    *out = ok ? LEFTEX_TRUE : LEFTEX_FALSE;
  });
}

leftex_status leftex_repetition_n(int alphabet_size, int t, int w, int h, int d, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = dup_string(leftex::repetition_N(alphabet_size, t, w, h, d).get_str());
  });
}

}  // extern "C"
