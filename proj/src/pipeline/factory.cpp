#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chartgen/errors.hpp"
#include "chartgen/pipeline.hpp"
#include "chartgen/resources.hpp"

namespace chartgen::pipeline {
namespace {

using vocab::LabelDomain;

constexpr std::array<const char*, 12> kMonthShort{"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                   "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
constexpr std::array<long long, 4> kIntegerSteps{1, 2, 5, 10};
constexpr series::Interval kOutlierFactors{2.0, 5.0};
constexpr double kPathScatterProb = 0.3;

std::vector<vocab::WordGroup> bundled_groups() {
  auto text = bundled_resource("word_groups.txt");
  if (!text) throw Error("missing bundled word_groups.txt");
  std::istringstream in{std::string(*text)};
  return vocab::read_word_groups(in);
}

std::vector<std::string> integer_labels(Rng& rng, std::size_t n) {
  long long origin, step;
  if (rng.bernoulli(0.5)) {
    origin = rng.uniform_int(1950, 2030 - static_cast<std::int64_t>(n));
    step = 1;
  } else {
    step = rng.pick(std::vector<long long>(kIntegerSteps.begin(), kIntegerSteps.end()));
    origin = step * rng.uniform_int(0, 100);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(origin + step * static_cast<long long>(i)));
  return out;
}

std::vector<std::string> domain_labels(const Resources& res, LabelDomain::Kind kind, std::size_t n,
                                       Rng& rng) {
  LabelDomain domain;
  domain.kind = kind;
  if (kind == LabelDomain::Kind::word_group) domain.group = &rng.pick(res.groups);
  if (vocab::domain_capacity(res.catalog, domain) < n) {
    domain = LabelDomain{};
    domain.kind = LabelDomain::Kind::part_numerical;
  }
  return vocab::sample_categorical_labels(res.catalog, domain, n, rng);
}

// Bar categories: places, months, days, part-numerical, word-group or integers.
std::vector<std::string> bar_labels(const Resources& res, std::size_t n, Rng& rng) {
  using K = LabelDomain::Kind;
  const int choice = static_cast<int>(rng.uniform_int(0, 5));
  switch (choice) {
    case 0: return domain_labels(res, K::places, n, rng);
    case 1: return domain_labels(res, K::months, n, rng);
    case 2: return domain_labels(res, K::days, n, rng);
    case 3: return domain_labels(res, K::part_numerical, n, rng);
    case 4: return domain_labels(res, K::word_group, n, rng);
    default: return integer_labels(rng, n);
  }
}

series::NumericSeries draw_values(PlotType type, std::size_t n, const Probabilities& probs,
                                  series::SeriesParams& params, Rng& rng) {
  params = series::sample_params(rng, probs.outlier);
  auto s = series::sample_series(params, n, rng);
  s = series::inject_outliers(std::move(s), params.outlier_prob, kOutlierFactors, rng);
  s = series::enforce_constraints(type, std::move(s));
  return series::quantize(std::move(s));
}

// Axis range of the scatter sampling region: origin and span share one scale.
std::pair<double, double> scatter_range(double scale, Rng& rng) {
  const double lo = metadata::round_significant(scale * rng.uniform(-1.0, 1.0));
  const double hi = metadata::round_significant(lo + scale * rng.uniform(0.5, 2.0));
  return {lo, hi};
}

double marker_radius(const layout::StyleParams& style, Rng& rng, double base) {
  return std::round(base * layout::theme(style.style_id).marker_scale * rng.uniform(0.8, 1.3) * 100) / 100;
}

void build_bar(ChartSpec& spec, const Resources& res, const Probabilities& probs, Rng& rng) {
  const std::size_t n = series::sample_point_count(spec.plot_type, rng);
  series::SeriesParams params;
  spec.y_values = draw_values(spec.plot_type, n, probs, params, rng);
  spec.scale_factor = params.scale_factor;
  spec.x_labels = bar_labels(res, n, rng);
}

void build_line(ChartSpec& spec, const Probabilities& probs, Rng& rng) {
  const std::size_t n = series::sample_point_count(PlotType::line, rng);
  series::SeriesParams params;
  spec.y_values = draw_values(PlotType::line, n, probs, params, rng);
  spec.scale_factor = params.scale_factor;

  const int kind = static_cast<int>(rng.uniform_int(0, 2));
  if (kind == 2) {
    spec.x_kind = XAxisKind::date;
    const auto month = rng.uniform_int(0, 11);
    const auto year = rng.uniform_int(1990, 2024);
    for (std::size_t i = 0; i < n; ++i) {
      const auto m = month + static_cast<std::int64_t>(i);
      spec.x_labels.push_back(std::string(kMonthShort[static_cast<std::size_t>(m % 12)]) + " " +
                              std::to_string(year + m / 12));
      spec.x_values.push_back(static_cast<double>(i));
    }
  } else {
    spec.x_kind = XAxisKind::numeric;
    spec.x_value_kind = ValueKind::integer;
    long long origin, step;
    if (kind == 1) {
      origin = rng.uniform_int(1900, 2030 - static_cast<std::int64_t>(n));
      step = 1;
    } else {
      origin = rng.uniform_int(0, 2000);
      step = rng.pick(std::vector<long long>(kIntegerSteps.begin(), kIntegerSteps.end()));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = static_cast<double>(origin + step * static_cast<long long>(i));
      spec.x_values.push_back(x);
      spec.x_labels.push_back(metadata::format_number(x, ValueKind::integer));
    }
    spec.x_scale_factor = static_cast<double>(step);
  }
  spec.flags.line_markers = rng.bernoulli(probs.line_markers);
  spec.flags.line_smoothing = rng.bernoulli(probs.line_smoothing);
  spec.marker_radius_px = marker_radius(spec.style, rng, 2.5);
}

void build_dot(ChartSpec& spec, const Resources& res, const Probabilities& probs, Rng& rng) {
  using K = LabelDomain::Kind;
  const std::size_t n = series::sample_point_count(PlotType::dot, rng);
  series::SeriesParams params;
  spec.y_values = draw_values(PlotType::dot, n, probs, params, rng);
  spec.scale_factor = params.scale_factor;
  if (rng.bernoulli(0.5)) {
    spec.x_labels = integer_labels(rng, n);
    spec.flags.dot_omit_x_labels = rng.bernoulli(probs.dot_label_omission);
  } else {
    constexpr std::array<K, 4> kinds{K::places, K::word_group, K::months, K::days};
    spec.x_labels = domain_labels(res, kinds[static_cast<std::size_t>(rng.uniform_int(0, 3))], n, rng);
  }
  spec.flags.dot_hide_y_ticks = rng.bernoulli(probs.dot_ytick_removal);
}

}  // namespace

Resources Resources::bundled() { return {vocab::LabelCatalog::bundled(), bundled_groups()}; }

Resources Resources::from_config(const GenConfig& c) {
  std::vector<vocab::WordGroup> groups;
  if (c.word_groups_path.empty()) {
    groups = bundled_groups();
  } else {
    std::ifstream in(c.word_groups_path);
    if (!in) throw IoError("cannot read " + c.word_groups_path.string());
    groups = vocab::read_word_groups(in);
  }
  return {vocab::LabelCatalog::from_files(c.places_path, c.months_path, c.days_path), std::move(groups)};
}

BuiltChart build_chart(PlotType type, std::uint64_t seed, const Resources& res,
                       const Probabilities& probs) {
  if (res.groups.empty()) throw EmptyGroupError("no word groups loaded");
  Rng rng(seed);
  ChartSpec spec;
  spec.plot_type = type;
  spec.seed = seed;
  spec.style = layout::sample_style(rng, probs.style);

  const vocab::WordGroup& group = rng.pick(res.groups);
  spec.titles.main = vocab::sample_title(group, vocab::TitleRole::main, rng);
  spec.titles.x = vocab::sample_title(group, vocab::TitleRole::x_axis, rng);
  spec.titles.y = vocab::sample_title(group, vocab::TitleRole::y_axis, rng);

  switch (type) {
    case PlotType::vbar:
    case PlotType::hbar: build_bar(spec, res, probs, rng); break;
    case PlotType::line: build_line(spec, probs, rng); break;
    case PlotType::dot: build_dot(spec, res, probs, rng); break;
    case PlotType::scatter: {
      const std::size_t n = series::sample_point_count(type, rng);
      spec.scale_factor = std::clamp(rng.log_uniform(series::kMinScale, series::kMaxScale),
                                     series::kMinScale, series::kMaxScale);
      spec.x_scale_factor = std::clamp(rng.log_uniform(series::kMinScale, series::kMaxScale),
                                       series::kMinScale, series::kMaxScale);
      const auto [x0, x1] = scatter_range(*spec.x_scale_factor, rng);
      const auto [y0, y1] = scatter_range(spec.scale_factor, rng);
      const DataWindow region{x0, x1, y0, y1};
      spec.window = region.padded(0.05);
      spec.marker_radius_px = marker_radius(spec.style, rng, 3.0);
      spec.min_sep_px = 2 * spec.marker_radius_px;
      spec.x_value_kind = ValueKind::real;
      spec.y_values.kind = ValueKind::real;
      const auto mode = rng.bernoulli(kPathScatterProb) ? series::ScatterMode::path : series::ScatterMode::random;

      // The window fixes the transform, so points can be placed in pixel space.
      layout::Geometry g = layout::compute_geometry(spec, spec.style);
      auto pts = series::sample_scatter_points(n, mode, spec.min_sep_px, g.transform, region, rng);
      std::stable_sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
      for (const Point& p : pts) {
        spec.x_values.push_back(p.x);
        spec.y_values.values.push_back(p.y);
      }
      spec.validate();
      return {std::move(spec), std::move(g)};
    }
  }
  spec.validate();
  layout::Geometry g = layout::compute_geometry(spec, spec.style);
  return {std::move(spec), std::move(g)};
}

}  // namespace chartgen::pipeline
