// Command-line front end. Talks to the library only through leftex.h.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "leftex/leftex.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

struct Failure {
  int exit_code;
  std::string message;
};

void check(leftex_status s) {
  if (s != LEFTEX_OK) throw Failure{kExitUsage, leftex_last_error()};
}

struct RuleDeleter {
  void operator()(leftex_rule* r) const { leftex_rule_free(r); }
};
struct ConfigDeleter {
  void operator()(leftex_config* c) const { leftex_config_free(c); }
};
using Rule = std::unique_ptr<leftex_rule, RuleDeleter>;
using Config = std::unique_ptr<leftex_config, ConfigDeleter>;

Rule load_rule(const std::string& text) {
  leftex_rule* r = nullptr;
  check(leftex_rule_parse(text.c_str(), &r));
  return Rule(r);
}

Config load_config(const std::string& text, const Rule& rule) {
  leftex_config* c = nullptr;
  check(leftex_config_parse(text.c_str(), leftex_rule_alphabet(rule.get()), &c));
  return Config(c);
}

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  leftex_string_free(s);
  return out;
}

int exit_for(leftex_verdict v) {
  switch (v) {
    case LEFTEX_TRUE: return kExitTrue;
    case LEFTEX_FALSE: return kExitFalse;
    case LEFTEX_UNKNOWN: break;
  }
  return kExitUnknown;
}

struct Interval {
  int64_t lo = 0;
  int64_t hi = 0;
};

Interval parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const int64_t v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    Interval out;
    out.lo = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    out.hi = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return out;
  } catch (const std::logic_error&) {
    throw Failure{kExitUsage, "bad column spec '" + text + "', expected a or a:b"};
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Failure{kExitUsage, "bad integer list '" + text + "'"};
    }
  }
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Failure{kExitUsage, "cannot open '" + path + "' for writing"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string dims_text(int h, int d, int w) {
  return "(" + std::to_string(h) + "," + std::to_string(d) + "," + std::to_string(w) + ")";
}

// Options shared by most subcommands.
struct Common {
  std::string rule;
  std::string config;
  int64_t steps = -1;
  int64_t positional_steps = -1;
  std::string cols;
  int64_t max_c = 500;
  int64_t max_p = 500;
  uint64_t budget = 0;
  unsigned threads = 1;
  std::string out;
  bool json = false;

  leftex_limits limits() const { return leftex_limits{budget, threads}; }
  int64_t steps_or(int64_t fallback) const {
    if (steps >= 0) return steps;
    return positional_steps >= 0 ? positional_steps : fallback;
  }
};

void add_budget(CLI::App* cmd, Common& o) {
  cmd->add_option("--budget", o.budget, "Enumeration budget (table evaluations); LEFTEX_BUDGET when omitted");
  cmd->add_option("--threads", o.threads, "Seed-space partitions evaluated concurrently")->check(CLI::PositiveNumber);
}

void add_steps(CLI::App* cmd, Common& o, const char* help) {
  cmd->add_option("--T,--steps", o.steps, help)->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"leftex: exact simulation and property checks for one-dimensional cellular automata"};
  app.require_subcommand(1);
  Common o;
  std::string format = "pbm";
  std::string palette;
  int maxval = 255;
  int rows = -1;
  bool no_binarize = false;
  int p = 0;
  int q = 0;
  std::string xi;
  std::string dims = "0,1,2";
  std::string bounds = "2,2,4";
  std::string lengths = "1,2,3,4,5,6,7,8";
  std::string perm = "1,1";
  std::vector<std::string> samples;

  auto* simulate = app.add_subcommand("simulate", "Print F^t(x) for t = 0..steps as configuration literals");
  simulate->add_option("rule", o.rule, "eca:N, mul:p/q, mulint:p/q, shift:n or a JSON rule file")->required();
  simulate->add_option("config", o.config, "Configuration literal or rat:NUM/DEN")->required();
  simulate->add_option("count", o.positional_steps, "Number of steps")->check(CLI::NonNegativeNumber);
  add_steps(simulate, o, "Number of steps");
  simulate->add_option("--out", o.out, "Write to FILE instead of stdout");

  auto* render = app.add_subcommand("render", "Render a space-time diagram");
  render->add_option("rule", o.rule)->required();
  render->add_option("config", o.config)->required();
  render->add_option("--rows", rows, "Rows to draw (default 32)")->check(CLI::PositiveNumber);
  add_steps(render, o, "Alias for the row count");
  render->add_option("--cols,--col", o.cols, "Column window a:b (default -32:32)");
  render->add_option("--format", format, "ascii, pbm or pgm")
      ->check(CLI::IsMember({"ascii", "pbm", "pgm"}));
  render->add_option("--palette", palette, "PGM gray levels per symbol, comma separated");
  render->add_option("--maxval", maxval, "PGM maximum gray value")->check(CLI::Range(1, 65535));
  render->add_flag("--no-binarize", no_binarize, "Reject alphabets larger than 2 in PBM instead of drawing s>0 black");
  render->add_option("--out", o.out, "Write to FILE instead of stdout");

  auto* atlas = app.add_subcommand("atlas", "Property table over all 256 elementary rules");
  atlas->add_flag("--json", o.json, "JSON instead of CSV");
  atlas->add_option("--out", o.out, "Write to FILE instead of stdout");
  add_budget(atlas, o);

  auto* verify = app.add_subcommand("verify-mul", "Check Mul_{p,pq} and Mul_{p/q,pq} against exact arithmetic");
  verify->add_option("p", p)->required();
  verify->add_option("q", q)->required();
  verify->add_option("xi", xi, "Positive rational NUM/DEN or integer")->required();
  verify->add_option("count", o.positional_steps, "Steps (default 8)")->check(CLI::NonNegativeNumber);
  add_steps(verify, o, "Steps (default 8)");

  auto* scan = app.add_subcommand("scan-period", "Search a column trace for an eventual period");
  scan->add_option("rule", o.rule)->required();
  scan->add_option("config", o.config)->required();
  scan->add_option("--cols,--col", o.cols, "Trace columns a:b or a single column (default 0)");
  add_steps(scan, o, "Horizon T (default 2000)");
  scan->add_option("--max-c", o.max_c, "Largest preperiod searched");
  scan->add_option("--max-p", o.max_p, "Largest period searched");
  scan->add_flag("--json", o.json);

  auto* recur = app.add_subcommand("recur", "Times t <= T with frac_c(F^t(x)) = frac_c(x)");
  recur->add_option("rule", o.rule)->required();
  recur->add_option("config", o.config)->required();
  recur->add_option("--col,--cols", o.cols, "Column c (default 0)");
  add_steps(recur, o, "Horizon T (default 500)");
  recur->add_flag("--json", o.json);

  auto* limits = app.add_subcommand("limits", "Census of length-n prefixes of frac_c(F^t(x)) for t in [T/2, T]");
  limits->add_option("rule", o.rule)->required();
  limits->add_option("config", o.config)->required();
  limits->add_option("--col,--cols", o.cols, "Column c (default 0)");
  add_steps(limits, o, "Horizon T (default 5000)");
  limits->add_option("--lengths", lengths, "Prefix lengths, comma separated");
  limits->add_flag("--json", o.json);
  limits->add_option("--out", o.out, "Write to FILE instead of stdout");

  auto* classify = app.add_subcommand("classify", "Rapid left expansivity verdict");
  classify->add_option("rule", o.rule)->required();
  classify->add_option("--bounds", bounds, "Dims search bounds max_h,max_d,max_w");
  classify->add_flag("--json", o.json);
  add_budget(classify, o);

  auto* expansive = app.add_subcommand("expansive", "Decide left expansivity for fixed dims");
  expansive->add_option("rule", o.rule)->required();
  expansive->add_option("--dims", dims, "h,d,w");
  expansive->add_flag("--json", o.json);
  add_budget(expansive, o);

  auto* find = app.add_subcommand("dims", "Smallest left-expansive dims within bounds");
  find->add_option("rule", o.rule)->required();
  find->add_option("--bounds", bounds, "max_h,max_d,max_w");
  find->add_flag("--json", o.json);
  add_budget(find, o);

  auto* permutive = app.add_subcommand("permutive", "Decide left permutivity");
  permutive->add_option("rule", o.rule)->required();
  permutive->add_option("--mn", perm, "Neighborhood m,n (default 1,1)");

  auto* speed = app.add_subcommand("speed", "Estimate the left spreading speed");
  speed->add_option("rule", o.rule)->required();
  speed->add_option("configs", samples, "Number-like sample configurations")->required();
  add_steps(speed, o, "Horizon T (default 2000)");
  speed->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      const Rule f = load_rule(o.rule);
      const Config x = load_config(o.config, f);
      char* text = nullptr;
      check(leftex_simulate(f.get(), x.get(), o.steps_or(0), &text));
      Output out(o.out);
      out.stream() << take(text);
      return kExitTrue;
    }

    if (render->parsed()) {
      const Rule f = load_rule(o.rule);
      const Config x = load_config(o.config, f);
      const Interval cols = o.cols.empty() ? Interval{-32, 32} : parse_interval(o.cols);
      const std::vector<int> levels = palette.empty() ? std::vector<int>{} : parse_int_list(palette);
      leftex_render_options opts{};
      opts.rows = rows > 0 ? rows : static_cast<int>(o.steps_or(32));
      opts.col_lo = cols.lo;
      opts.col_hi = cols.hi;
      opts.format = format == "ascii" ? LEFTEX_ASCII : (format == "pgm" ? LEFTEX_PGM : LEFTEX_PBM);
      opts.maxval = maxval;
      opts.palette = levels.empty() ? nullptr : levels.data();
      opts.palette_size = levels.size();
      opts.binarize = no_binarize ? 0 : 1;
      if (!o.out.empty()) {
        check(leftex_render_file(f.get(), x.get(), &opts, o.out.c_str()));
      } else {
        char* text = nullptr;
        check(leftex_render(f.get(), x.get(), &opts, &text));
        std::cout << take(text);
      }
      return kExitTrue;
    }

    if (atlas->parsed()) {
      const leftex_limits l = o.limits();
      char* text = nullptr;
      check(leftex_atlas(&l, o.json ? 1 : 0, &text));
      Output out(o.out);
      out.stream() << take(text);
      return kExitTrue;
    }

    if (verify->parsed()) {
      leftex_verdict v = LEFTEX_UNKNOWN;
      check(leftex_verify_mul(p, q, xi.c_str(), static_cast<int>(o.steps_or(8)), &v));
      std::cout << (v == LEFTEX_TRUE ? "PASS" : "FAIL") << '\n';
      return exit_for(v);
    }

    if (scan->parsed()) {
      const Rule f = load_rule(o.rule);
      const Config x = load_config(o.config, f);
      const Interval cols = o.cols.empty() ? Interval{0, 0} : parse_interval(o.cols);
      leftex_verdict v = LEFTEX_UNKNOWN;
      char* json = nullptr;
      check(leftex_scan_period(f.get(), x.get(), cols.lo, cols.hi, o.steps_or(2000), o.max_c, o.max_p, &v, &json));
      const std::string report = take(json);
      if (o.json) {
        std::cout << report << '\n';
      } else {
        // Pull c and p out of the report without a JSON dependency in the CLI.
        auto field = [&](const std::string& key) {
          const auto at = report.find("\"" + key + "\":");
          return at == std::string::npos ? std::string("?")
                                         : report.substr(at + key.size() + 3,
                                                         report.find_first_of(",}", at) - (at + key.size() + 3));
        };
        if (v == LEFTEX_TRUE) {
          std::cout << "PeriodFound c=" << field("preperiod") << " p=" << field("period") << '\n';
        } else {
          std::cout << "NoPeriodFound\n";
        }
      }
      return exit_for(v);
    }

    if (recur->parsed()) {
      const Rule f = load_rule(o.rule);
      const Config x = load_config(o.config, f);
      const Interval col = o.cols.empty() ? Interval{0, 0} : parse_interval(o.cols);
      leftex_verdict v = LEFTEX_UNKNOWN;
      char* json = nullptr;
      check(leftex_recur(f.get(), x.get(), col.lo, o.steps_or(500), &v, &json));
      const std::string report = take(json);
      if (o.json) {
        std::cout << report << '\n';
      } else {
        const auto at = report.find("\"hits\":");
        std::cout << "hits " << report.substr(at + 7, report.find(']', at) - at - 6) << '\n';
      }
      return exit_for(v);
    }

    if (limits->parsed()) {
      const Rule f = load_rule(o.rule);
      const Config x = load_config(o.config, f);
      const Interval col = o.cols.empty() ? Interval{0, 0} : parse_interval(o.cols);
      const std::vector<int> ns = parse_int_list(lengths);
      char* json = nullptr;
      check(leftex_limits_census(f.get(), x.get(), col.lo, o.steps_or(5000), ns.data(), ns.size(), 1, &json));
      const std::string report = take(json);
      Output out(o.out);
      if (o.json) {
        out.stream() << report << '\n';
      } else {
        char* csv = nullptr;
        check(leftex_limits_census(f.get(), x.get(), col.lo, o.steps_or(5000), ns.data(), ns.size(), 0, &csv));
        out.stream() << take(csv);
      }
      return report.find("\"monotone\":true") != std::string::npos ? kExitTrue : kExitFalse;
    }

    if (classify->parsed() || find->parsed()) {
      const Rule f = load_rule(o.rule);
      const std::vector<int> b = parse_int_list(bounds);
      if (b.size() != 3) throw Failure{kExitUsage, "--bounds needs max_h,max_d,max_w"};
      const leftex_limits l = o.limits();
      leftex_verdict v = LEFTEX_UNKNOWN;
      char* json = nullptr;
      if (classify->parsed()) {
        check(leftex_classify(f.get(), b[0], b[1], b[2], &l, &v, &json));
      } else {
        check(leftex_find_dims(f.get(), b[0], b[1], b[2], &l, &v, &json));
      }
      const std::string report = take(json);
      if (o.json) {
        std::cout << report << '\n';
      } else if (classify->parsed()) {
        std::cout << (v == LEFTEX_TRUE ? "Yes" : v == LEFTEX_FALSE ? "No" : "Unknown") << '\n' << report << '\n';
      } else {
        std::cout << report << '\n';
      }
      return exit_for(v);
    }

    if (expansive->parsed()) {
      const Rule f = load_rule(o.rule);
      const std::vector<int> hdw = parse_int_list(dims);
      if (hdw.size() != 3) throw Failure{kExitUsage, "--dims needs h,d,w"};
      const leftex_limits l = o.limits();
      leftex_verdict v = LEFTEX_UNKNOWN;
      char* json = nullptr;
      check(leftex_expansive(f.get(), hdw[0], hdw[1], hdw[2], &l, &v, &json));
      const std::string report = take(json);
      if (o.json) {
        std::cout << report << '\n';
      } else {
        std::cout << (v == LEFTEX_TRUE ? "True" : v == LEFTEX_FALSE ? "False" : "Unknown") << " dims="
                  << dims_text(hdw[0], hdw[1], hdw[2]) << '\n'
                  << report << '\n';
      }
      return exit_for(v);
    }

    if (permutive->parsed()) {
      const Rule f = load_rule(o.rule);
      const std::vector<int> mn = parse_int_list(perm);
      if (mn.size() != 2) throw Failure{kExitUsage, "--mn needs m,n"};
      leftex_verdict v = LEFTEX_UNKNOWN;
      check(leftex_left_permutive(f.get(), mn[0], mn[1], &v));
      std::cout << (v == LEFTEX_TRUE ? "True" : "False") << '\n';
      return exit_for(v);
    }

    if (speed->parsed()) {
      const Rule f = load_rule(o.rule);
      std::vector<Config> xs;
      std::vector<const leftex_config*> raw;
      for (const auto& s : samples) {
        xs.push_back(load_config(s, f));
        raw.push_back(xs.back().get());
      }
      char* json = nullptr;
      check(leftex_speed(f.get(), raw.data(), raw.size(), o.steps_or(2000), &json));
      std::cout << take(json) << '\n';
      return kExitTrue;
    }
  } catch (const Failure& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }
  return kExitUsage;
}
