#include "leftex/render.hpp"

#include <json.hpp>
#include <sstream>

namespace leftex {

std::vector<int> default_palette(int alphabet_size, int maxval) {
  std::vector<int> out(static_cast<std::size_t>(alphabet_size));
  if (alphabet_size == 1) {
    out[0] = maxval;
    return out;
  }
  for (int s = 0; s < alphabet_size; ++s) {
    // Rounded to nearest; symbol 0 is white.
    out[static_cast<std::size_t>(s)] = maxval - (2 * s * maxval + (alphabet_size - 1)) / (2 * (alphabet_size - 1));
  }
  return out;
}

namespace {

char ascii_glyph(Symbol s, int alphabet_size) {
  if (s == 0) return ' ';
  if (alphabet_size == 2) return '#';
  if (s < 10) return static_cast<char>('0' + s);
  if (s < 36) return static_cast<char>('a' + s - 10);
  return '?';
}

}  // namespace

void render(std::ostream& out, const Automaton& f, const Configuration& x, const RenderSpec& spec) {
  if (spec.rows < 1) throw Error(ErrorCode::InvalidArgument, "rows must be >= 1");
  if (spec.col_lo > spec.col_hi) throw Error(ErrorCode::EmptyInterval, "col_lo > col_hi");
  const int n = x.alphabet().size();
  std::vector<int> palette = spec.palette;
  if (spec.format == RenderFormat::Pbm && !spec.binarize && n > 2) {
    throw Error(ErrorCode::NonBinaryForPBM, "alphabet of size " + std::to_string(n) + " in PBM without binarization");
  }
  if (spec.format == RenderFormat::Pgm) {
    if (palette.empty()) palette = default_palette(n, spec.maxval);
    if (static_cast<int>(palette.size()) < n) {
      throw Error(ErrorCode::PaletteIncomplete, "palette has " + std::to_string(palette.size()) + " entries for " +
                                                    std::to_string(n) + " symbols");
    }
    for (int g : palette) {
      if (g < 0 || g > spec.maxval) throw Error(ErrorCode::InvalidArgument, "palette entry outside [0, maxval]");
    }
  }
  const Index width = spec.col_hi - spec.col_lo + 1;
  switch (spec.format) {
    case RenderFormat::Pbm: out << "P1\n" << width << ' ' << spec.rows << '\n'; break;
    case RenderFormat::Pgm: out << "P2\n" << width << ' ' << spec.rows << '\n' << spec.maxval << '\n'; break;
    case RenderFormat::Ascii: break;
  }
  Configuration y = x;
  std::string line;
  for (int t = 0; t < spec.rows; ++t) {
    if (t > 0) y = apply(f, y);
    const Word row = window(y, spec.col_lo, spec.col_hi);
    line.clear();
    for (std::size_t k = 0; k < row.size(); ++k) {
      const Symbol s = row[k];
      switch (spec.format) {
        case RenderFormat::Pbm:
          if (k > 0) line.push_back(' ');
          line.push_back(s > 0 ? '1' : '0');
          break;
        case RenderFormat::Pgm:
          if (k > 0) line.push_back(' ');
          line += std::to_string(palette[s]);
          break;
        case RenderFormat::Ascii: line.push_back(ascii_glyph(s, n)); break;
      }
    }
    out << line << '\n';
  }
}

std::string render(const Automaton& f, const Configuration& x, const RenderSpec& spec) {
  std::ostringstream os;
  render(os, f, x, spec);
  return os.str();
}

std::vector<AtlasRow> eca_atlas(const DeciderLimits& limits) {
  std::vector<AtlasRow> rows;
  const RapidSearchBounds bounds{2, 2, 4};
  for (int number = 0; number < 256; ++number) {
    const Automaton f(eca_rule(number), "eca:" + std::to_string(number));
    AtlasRow row;
    row.rule = number;
    row.permutive = is_left_permutive(f.rule(), 1, 1);
    row.spreading = is_left_spreading_eca(f.rule());
    const RapidClassification c = classify_rapid(f, bounds, limits);
    row.dims = c.dims;
    row.rapid = c.verdict;
    rows.push_back(row);
  }
  return rows;
}

std::string atlas_csv(const std::vector<AtlasRow>& rows) {
  std::ostringstream os;
  os << "rule,left_permutive,spreading_criterion,h,d,w,rapid\n";
  for (const AtlasRow& r : rows) {
    os << r.rule << ',' << (r.permutive ? "true" : "false") << ',' << (r.spreading ? "true" : "false") << ',';
    if (r.dims) {
      os << r.dims->h << ',' << r.dims->d << ',' << r.dims->w;
    } else {
      os << ",,";
    }
    os << ',' << to_string(r.rapid) << '\n';
  }
  return os.str();
}

std::string atlas_json(const std::vector<AtlasRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const AtlasRow& r : rows) {
    nlohmann::json j{{"rule", r.rule},
                     {"left_permutive", r.permutive},
                     {"spreading_criterion", r.spreading},
                     {"rapid", to_string(r.rapid)}};
    j["dims"] = r.dims ? nlohmann::json{r.dims->h, r.dims->d, r.dims->w} : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace leftex
