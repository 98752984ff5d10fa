#include "chartgen/types.hpp"

namespace chartgen {

std::string_view to_string(PlotType type) {
  switch (type) {
    case PlotType::vbar: return "vbar";
    case PlotType::hbar: return "hbar";
    case PlotType::scatter: return "scatter";
    case PlotType::line: return "line";
    case PlotType::dot: return "dot";
  }
  return "unknown";
}

std::optional<PlotType> parse_plot_type(std::string_view name) {
  for (PlotType t : kAllPlotTypes) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

}  // namespace chartgen
