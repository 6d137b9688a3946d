#ifndef LEFTEX_H
#define LEFTEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LEFTEX_API __declspec(dllexport)
#else
#define LEFTEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct leftex_rule leftex_rule;
typedef struct leftex_config leftex_config;

/* Values 1..23 mirror leftex::ErrorCode. */
typedef enum leftex_status {
  LEFTEX_OK = 0,
  LEFTEX_E_INVALID_ARGUMENT = 1,
  LEFTEX_E_PARSE = 2,
  LEFTEX_E_ALPHABET_MISMATCH = 3,
  LEFTEX_E_SYMBOL_OUT_OF_RANGE = 4,
  LEFTEX_E_NOT_NUMBER_LIKE = 5,
  LEFTEX_E_EMPTY_INTERVAL = 6,
  LEFTEX_E_INCOMPLETE_TABLE = 7,
  LEFTEX_E_OUT_OF_RANGE = 8,
  LEFTEX_E_SEED_TOO_SHORT = 9,
  LEFTEX_E_TABLE_TOO_LARGE = 10,
  LEFTEX_E_NOT_POSITIVE = 11,
  LEFTEX_E_BAD_BASE = 12,
  LEFTEX_E_BAD_SPEC = 13,
  LEFTEX_E_BAD_DIMS = 14,
  LEFTEX_E_INCOMPATIBLE_RULE = 15,
  LEFTEX_E_NOT_ECA = 16,
  LEFTEX_E_ZERO_NOT_QUIESCENT = 17,
  LEFTEX_E_PREFIX_TOO_SHORT = 18,
  LEFTEX_E_INSUFFICIENT_HORIZON = 19,
  LEFTEX_E_PRECONDITION_FAILED = 20,
  LEFTEX_E_PALETTE_INCOMPLETE = 21,
  LEFTEX_E_NON_BINARY_FOR_PBM = 22,
  LEFTEX_E_IO = 23,
  LEFTEX_E_INTERNAL = 99
} leftex_status;

/* Three-valued outcome shared by deciders and checks. */
typedef enum leftex_verdict { LEFTEX_TRUE = 0, LEFTEX_FALSE = 1, LEFTEX_UNKNOWN = 2 } leftex_verdict;

typedef enum leftex_format { LEFTEX_ASCII = 0, LEFTEX_PBM = 1, LEFTEX_PGM = 2 } leftex_format;

typedef struct leftex_limits {
  uint64_t budget;  /* 0: LEFTEX_BUDGET or the built-in default */
  unsigned threads; /* 0 behaves as 1 */
} leftex_limits;

typedef struct leftex_render_options {
  int rows;
  int64_t col_lo;
  int64_t col_hi;
  leftex_format format;
  int maxval;           /* PGM only; 0 selects 255 */
  const int* palette;   /* PGM gray level per symbol, or NULL */
  size_t palette_size;
  int binarize;         /* PBM: nonzero draws every nonzero symbol black */
} leftex_render_options;

/* Message of the last failed call on this thread; "" if none. */
LEFTEX_API const char* leftex_last_error(void);
LEFTEX_API const char* leftex_status_name(leftex_status status);
/* Frees strings returned through char** out-parameters. */
LEFTEX_API void leftex_string_free(char* s);

/* eca:N, mul:p/q, mulint:p/q, shift:n, inline JSON or a JSON file path. */
LEFTEX_API leftex_status leftex_rule_parse(const char* text, leftex_rule** out);
LEFTEX_API void leftex_rule_free(leftex_rule* rule);
LEFTEX_API int leftex_rule_alphabet(const leftex_rule* rule);
LEFTEX_API leftex_status leftex_rule_to_json(const leftex_rule* rule, char** out);
LEFTEX_API leftex_status leftex_rule_compose(const leftex_rule* f, const leftex_rule* g, leftex_rule** out);

/* A literal such as "[L:0] 1 [R:0] @0", or rat:NUM/DEN expanded in base alphabet_size. */
LEFTEX_API leftex_status leftex_config_parse(const char* text, int alphabet_size, leftex_config** out);
LEFTEX_API leftex_status leftex_config_from_rational(const char* rational, int base, leftex_config** out);
LEFTEX_API void leftex_config_free(leftex_config* config);
LEFTEX_API leftex_status leftex_config_to_string(const leftex_config* config, char** out);
LEFTEX_API leftex_status leftex_config_window(const leftex_config* config, int64_t i, int64_t j, char** out);
LEFTEX_API leftex_status leftex_config_left_edge(const leftex_config* config, int64_t* out);
/* Exact value as "NUM/DEN" (or an integer). */
LEFTEX_API leftex_status leftex_config_real(const leftex_config* config, char** out);

LEFTEX_API leftex_status leftex_apply(const leftex_rule* rule, const leftex_config* x, leftex_config** out);
LEFTEX_API leftex_status leftex_iterate(const leftex_rule* rule, const leftex_config* x, int64_t steps,
                                        leftex_config** out);
/* One literal per line for t = 0..steps. */
LEFTEX_API leftex_status leftex_simulate(const leftex_rule* rule, const leftex_config* x, int64_t steps, char** out);
LEFTEX_API leftex_status leftex_render(const leftex_rule* rule, const leftex_config* x,
                                       const leftex_render_options* options, char** out);
/* Writes straight to a file, one row at a time. */
LEFTEX_API leftex_status leftex_render_file(const leftex_rule* rule, const leftex_config* x,
                                            const leftex_render_options* options, const char* path);
LEFTEX_API leftex_status leftex_atlas(const leftex_limits* limits, int as_json, char** out);

LEFTEX_API leftex_status leftex_verify_mul(int p, int q, const char* xi, int steps, leftex_verdict* out);
LEFTEX_API leftex_status leftex_left_permutive(const leftex_rule* rule, int m, int n, leftex_verdict* out);
LEFTEX_API leftex_status leftex_expansive(const leftex_rule* rule, int h, int d, int w, const leftex_limits* limits,
                                          leftex_verdict* verdict, char** json);
LEFTEX_API leftex_status leftex_find_dims(const leftex_rule* rule, int max_h, int max_d, int max_w,
                                          const leftex_limits* limits, leftex_verdict* verdict, char** json);
LEFTEX_API leftex_status leftex_classify(const leftex_rule* rule, int max_h, int max_d, int max_w,
                                         const leftex_limits* limits, leftex_verdict* verdict, char** json);
LEFTEX_API leftex_status leftex_speed(const leftex_rule* rule, const leftex_config* const* samples, size_t count,
                                      int64_t horizon, char** json);

/* verdict: TRUE when a period was found, FALSE otherwise. */
LEFTEX_API leftex_status leftex_scan_period(const leftex_rule* rule, const leftex_config* x, int64_t i, int64_t j,
                                            int64_t horizon, int64_t max_c, int64_t max_p, leftex_verdict* verdict,
                                            char** json);
/* complexity[k-1] = distinct length-k factors of the interned trace, k = 1..max_k. */
LEFTEX_API leftex_status leftex_trace_complexity(const leftex_rule* rule, const leftex_config* x, int64_t i, int64_t j,
                                                 int64_t horizon, size_t max_k, uint64_t* complexity);
/* verdict: TRUE when no return time was found. */
LEFTEX_API leftex_status leftex_recur(const leftex_rule* rule, const leftex_config* x, int64_t c, int64_t horizon,
                                      leftex_verdict* verdict, char** json);
LEFTEX_API leftex_status leftex_limits_census(const leftex_rule* rule, const leftex_config* x, int64_t c,
                                              int64_t horizon, const int* lengths, size_t count, int as_json,
                                              char** out);
LEFTEX_API leftex_status leftex_propagation(const leftex_rule* rule, int h, int d, int w, const leftex_config* x,
                                            int64_t i, int64_t preperiod, int64_t period, int64_t horizon,
                                            const leftex_limits* limits, leftex_verdict* out);
LEFTEX_API leftex_status leftex_repetition_n(int alphabet_size, int t, int w, int h, int d, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LEFTEX_H */
