#include <algorithm>
#include <cmath>
#include <numeric>

#include "chartgen/chart.hpp"
#include "chartgen/errors.hpp"

namespace chartgen {

void ChartSpec::validate() const {
  const std::size_t n = size();
  const auto range = series::point_count_range(plot_type);
  if (n < range.lo || n > range.hi) {
    throw SpecError(std::string(to_string(plot_type)) + " needs between " + std::to_string(range.lo) +
                    " and " + std::to_string(range.hi) + " points, got " + std::to_string(n));
  }
  for (double v : y_values.values) {
    if (!std::isfinite(v)) throw SpecError("non-finite value");
  }
  if (plot_type == PlotType::scatter) {
    if (x_values.size() != n) throw SpecError("scatter x/y lists differ in length");
  } else if (x_labels.size() != n) {
    throw SpecError("label count does not match value count");
  }
  if ((plot_type == PlotType::scatter || plot_type == PlotType::line) && x_values.size() != n) {
    throw SpecError("x positions do not match value count");
  }
  for (double v : x_values) {
    if (!std::isfinite(v)) throw SpecError("non-finite x value");
  }
  if (plot_type == PlotType::line) {
    for (std::size_t i = 1; i < n; ++i) {
      if (!(x_values[i] > x_values[i - 1])) throw SpecError("line x positions must increase");
    }
  }
  for (const auto& l : x_labels) {
    if (!metadata::is_valid_label(l)) throw SpecError("invalid label '" + l + "'");
  }
  if (is_bar(plot_type)) {
    const auto [mn, mx] = std::minmax_element(y_values.values.begin(), y_values.values.end());
    if (!(*mn > 0)) throw SpecError("bar values must be positive");
    if (*mx > *mn * series::kBarMaxRatio) throw SpecError("bar max/min ratio above 200");
  }
  if (plot_type == PlotType::dot) {
    for (double v : y_values.values) {
      if (v != std::round(v) || v < series::kDotMin || v > series::kDotMax) {
        throw SpecError("dot counts must be integers in [1, 10]");
      }
    }
  }
  if (!style.in_range()) throw SpecError("style parameters out of range");
  if (plot_type == PlotType::scatter && !(min_sep_px > 0)) throw SpecError("scatter needs min_sep_px");
}

metadata::GroundTruth ground_truth(const ChartSpec& spec) {
  using metadata::format_number;
  const auto& v = spec.y_values.values;
  const ValueKind kind = spec.y_values.kind;
  std::vector<metadata::LabelPair> pairs;
  pairs.reserve(v.size());
  switch (spec.plot_type) {
    case PlotType::hbar:
      for (std::size_t i = 0; i < v.size(); ++i) {
        pairs.push_back({format_number(v[i], kind), spec.x_labels[i]});
      }
      return metadata::GroundTruth(std::move(pairs), metadata::Orientation::top_down);
    case PlotType::scatter: {
      std::vector<std::size_t> order(v.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return spec.x_values[a] < spec.x_values[b]; });
      for (std::size_t i : order) {
        pairs.push_back({format_number(spec.x_values[i], spec.x_value_kind), format_number(v[i], kind)});
      }
      break;
    }
    default:
      for (std::size_t i = 0; i < v.size(); ++i) {
        pairs.push_back({spec.x_labels[i], format_number(v[i], kind)});
      }
  }
  return metadata::GroundTruth(std::move(pairs));
}

}  // namespace chartgen
