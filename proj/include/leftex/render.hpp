#ifndef LEFTEX_RENDER_HPP
#define LEFTEX_RENDER_HPP

#include <ostream>
#include <string>
#include <vector>

#include "leftex/automaton.hpp"
#include "leftex/config.hpp"
#include "leftex/deciders.hpp"

namespace leftex {

enum class RenderFormat { Ascii, Pbm, Pgm };

struct RenderSpec {
  int rows = 32;
  Index col_lo = -32;
  Index col_hi = 32;
  RenderFormat format = RenderFormat::Pbm;
  std::vector<int> palette;  ///< gray level per symbol for PGM; empty selects evenly spaced levels
  int maxval = 255;
  bool binarize = true;  ///< PBM draws every nonzero symbol black; false rejects non-binary alphabets
};

/// Evenly spaced gray levels with symbol 0 white and the largest symbol black.
std::vector<int> default_palette(int alphabet_size, int maxval = 255);

/// Streams rows t = 0..rows-1 as window(F^t(x), col_lo, col_hi). Memory stays at
/// one configuration plus one row. Throws PaletteIncomplete, NonBinaryForPBM.
void render(std::ostream& out, const Automaton& f, const Configuration& x, const RenderSpec& spec);
std::string render(const Automaton& f, const Configuration& x, const RenderSpec& spec);

struct AtlasRow {
  int rule = 0;
  bool permutive = false;
  bool spreading = false;
  std::optional<ExpansivityDims> dims;
  RapidVerdict rapid = RapidVerdict::Unknown;
};

/// All 256 elementary rules; dims searched over h,d in 0..2 and w in 1..4.
std::vector<AtlasRow> eca_atlas(const DeciderLimits& limits = {});
std::string atlas_csv(const std::vector<AtlasRow>& rows);
std::string atlas_json(const std::vector<AtlasRow>& rows);

}  // namespace leftex

#endif  // LEFTEX_RENDER_HPP
