#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace chartgen {

enum class PlotType { vbar, hbar, scatter, line, dot };

inline constexpr std::array<PlotType, 5> kAllPlotTypes{
    PlotType::vbar, PlotType::hbar, PlotType::scatter, PlotType::line, PlotType::dot};

std::string_view to_string(PlotType type);
std::optional<PlotType> parse_plot_type(std::string_view name);

inline bool is_bar(PlotType type) { return type == PlotType::vbar || type == PlotType::hbar; }

// Numeric representation of a value column.
enum class ValueKind { integer, real };

}  // namespace chartgen
