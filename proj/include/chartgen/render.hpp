#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chartgen/chart.hpp"
#include "chartgen/layout.hpp"
#include "chartgen/svg.hpp"

namespace chartgen::render {

inline constexpr const char* kBarClass = "mark-bar";
inline constexpr const char* kPointClass = "mark-point";
inline constexpr const char* kDotClass = "mark-dot";
inline constexpr const char* kLineClass = "mark-line";
inline constexpr const char* kGeometryId = "chart-geometry";

struct SvgDocument {
  int width = 0;
  int height = 0;
  svg::Element root;

  std::string to_string() const;
};

// Throws SpecError for an invalid spec and OverlapError when the laid-out
// labels intersect.
SvgDocument render_chart(const ChartSpec& spec, const layout::Geometry& geometry);

// dpi_scale in [0.5, 4]. Throws RasterError naming any element it cannot draw.
std::vector<std::uint8_t> rasterize(const SvgDocument& doc, double dpi_scale = 1.0);

}  // namespace chartgen::render
