#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chartgen/rng.hpp"

namespace chartgen::layout {

inline constexpr int kStyleCount = 8;
inline constexpr int kFontCount = 9;
inline constexpr int kColorMin = 40;
inline constexpr int kColorMax = 200;
inline constexpr double kMarginMin = 0.05;
inline constexpr double kMarginMax = 0.22;
inline constexpr double kBarGapMin = 0.05;
inline constexpr double kBarGapMax = 0.5;
inline constexpr int kFigureMin = 480;
inline constexpr int kFigureMax = 1024;
inline constexpr double kFontSizeMin = 8.0;
inline constexpr double kFontSizeMax = 16.0;

struct Rgb {
  int r = 0;
  int g = 0;
  int b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

enum class Side { left = 0, right = 1, top = 2, bottom = 3 };

struct StyleParams {
  int style_id = 0;
  int font_id = 0;
  Rgb color{100, 100, 100};
  bool show_ticks_x = true;
  bool show_ticks_y = true;
  bool show_grid = false;
  bool show_spines = true;
  std::array<double, 4> margin_fracs{0.1, 0.1, 0.1, 0.1};  // indexed by Side
  double bar_gap_frac = 0.2;
  int width_px = 640;
  int height_px = 480;
  double font_size_pt = 10.0;

  double margin(Side side) const { return margin_fracs[static_cast<int>(side)]; }
  bool in_range() const;
  friend bool operator==(const StyleParams&, const StyleParams&) = default;
};

// Short stable hex digest of every field.
std::string style_digest(const StyleParams& style);

struct StyleProbabilities {
  double show_ticks = 0.8;
  double show_grid = 0.5;
  double show_spines = 0.7;
};

StyleParams sample_style(Rng& rng, const StyleProbabilities& probs = {});

struct Theme {
  std::string name;
  std::string background;
  std::string axes_face;
  std::string text;
  std::string grid;
  double grid_width = 1;
  std::string grid_dash;
  std::string spine;
  double spine_width = 1;
  bool all_spines = true;
  double marker_scale = 1;
  double line_width = 1.5;
};

// Bundled presets, indexed by style_id.
const std::vector<Theme>& themes();
const Theme& theme(int style_id);

struct FontMetrics {
  std::string family;
  std::string weight;
  int ascent = 0;   // 1/1000 em
  int descent = 0;  // 1/1000 em, positive
  std::array<int, 95> advances{};  // codepoints 32..126, 1/1000 em; -1 if absent
  int average_advance = 0;
};

FontMetrics parse_font_metrics(std::string_view text);
// Bundled tables, indexed by font_id.
const FontMetrics& font(int font_id);

}  // namespace chartgen::layout
