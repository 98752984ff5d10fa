#pragma once

#include <span>
#include <string>
#include <vector>

#include "chartgen/chart.hpp"
#include "chartgen/geometry.hpp"
#include "chartgen/style.hpp"

namespace chartgen::layout {

inline constexpr double kPxPerPt = 96.0 / 72.0;
inline double pt_to_px(double pt) { return pt * kPxPerPt; }

// Ticks at multiples of 1, 2, 2.5 or 5 x 10^k covering [vmin, vmax], with the
// interval count as close to `target` as possible. Degenerate ranges expand by
// +-max(1, |v| * 0.1).
std::vector<double> nice_ticks(double vmin, double vmax, int target);

struct Extent {
  double width = 0;
  double height = 0;
};

// Sum of per-glyph advances; height is the font's line height. Glyphs
// outside the table use the average advance.
Extent estimate_text_extent(std::string_view text, int font_id, double size_pt);
// Number of glyph lookups that fell back to the average advance.
std::size_t missing_glyph_count();

// True iff any two rectangles intersect with positive area.
bool detect_label_overlap(std::span<const Rect> boxes);

enum class TextRole { tick_x, tick_y, title_main, title_x, title_y };
enum class Anchor { start, middle, end };

const char* css_class(TextRole role);

// A positioned string. `anchor` is on the baseline; rotation is clockwise in
// degrees about the anchor (SVG convention).
struct TextItem {
  std::string text;
  TextRole role = TextRole::tick_x;
  Point anchor;
  Anchor align = Anchor::middle;
  double size_pt = 10;
  int font_id = 0;
  double rotation_deg = 0;
};

// Pixel AABB of the (possibly rotated) text.
Rect text_box(const TextItem& item);

struct Tick {
  double value = 0;  // data units
  std::string label;
  bool labeled = true;
};

struct AxisPlan {
  std::vector<Tick> ticks;
  bool show_marks = true;
  double label_rotation = 0;
};

struct Geometry {
  Rect figure;
  Rect axes_rect;
  DataWindow data_window;
  Transform transform;
  AxisPlan x_axis;
  AxisPlan y_axis;
  std::vector<TextItem> texts;  // tick labels and titles
  double slot_px = 0;           // categorical spacing along the category axis
};

inline constexpr double kDotWindowTop = 11.5;
inline constexpr double kTickLength = 4.0;

// Data window, axes rectangle and every text placement for the chart. Tries
// label rotation (45, then 90 degrees), fewer ticks and smaller tick fonts
// before giving up with OverlapError. Throws GeometryError when the margins
// leave no usable axes area.
Geometry compute_geometry(const ChartSpec& spec, const StyleParams& style);

// Data window a spec would get without an explicit one.
DataWindow data_window_for(const ChartSpec& spec);

}  // namespace chartgen::layout
