#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chartgen/geometry.hpp"
#include "chartgen/metadata.hpp"
#include "chartgen/series.hpp"
#include "chartgen/style.hpp"
#include "chartgen/types.hpp"

namespace chartgen {

struct Titles {
  std::string main;
  std::string x;  // horizontal axis
  std::string y;  // vertical axis
  friend bool operator==(const Titles&, const Titles&) = default;
};

// How x labels relate to x positions.
enum class XAxisKind {
  categorical,  // positions are 0..n-1, labels are arbitrary text
  numeric,      // positions are the values the labels spell
  date,         // positions are 0..n-1, labels are consecutive dates
};

struct RenderFlags {
  bool line_smoothing = false;
  bool line_markers = false;
  bool dot_omit_x_labels = false;
  bool dot_hide_y_ticks = false;
  friend bool operator==(const RenderFlags&, const RenderFlags&) = default;
};

// Complete recipe for one chart.
struct ChartSpec {
  PlotType plot_type = PlotType::vbar;
  XAxisKind x_kind = XAxisKind::categorical;
  std::vector<std::string> x_labels;
  std::vector<double> x_values;  // data-space x of every point
  series::NumericSeries y_values;
  ValueKind x_value_kind = ValueKind::integer;  // for numeric x
  Titles titles;
  layout::StyleParams style;
  std::uint64_t seed = 0;

  // Provenance of the numeric sampling.
  double scale_factor = 1.0;
  std::optional<double> x_scale_factor;

  // Scatter draws into a fixed window chosen before its points.
  std::optional<DataWindow> window;
  double marker_radius_px = 3.5;
  double min_sep_px = 0;
  RenderFlags flags;

  std::size_t size() const { return y_values.values.size(); }
  // Throws SpecError.
  void validate() const;
};

// Rows in metadata order: left-to-right by x, top-down for horizontal bars
// (where x is the value and y the category).
metadata::GroundTruth ground_truth(const ChartSpec& spec);

}  // namespace chartgen
