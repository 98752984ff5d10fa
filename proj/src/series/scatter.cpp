#include <algorithm>
#include <cmath>

#include "chartgen/errors.hpp"
#include "chartgen/metadata.hpp"
#include "chartgen/series.hpp"

namespace chartgen::series {
namespace {

Point snap_data(Point p) {
  return {metadata::round_significant(p.x), metadata::round_significant(p.y)};
}

bool separated(const std::vector<Point>& placed, Point q, double min_sep) {
  const double limit = min_sep * min_sep;
  for (const Point& a : placed) {
    const double dx = a.x - q.x;
    const double dy = a.y - q.y;
    if (dx * dx + dy * dy < limit) return false;
  }
  return true;
}

// Random trend normalized to [0, 1] over t in [0, 1].
struct Trend {
  Polynomial poly;
  double lo = 0;
  double hi = 1;

  explicit Trend(Rng& rng) {
    const int degree = static_cast<int>(rng.uniform_int(1, 3));
    poly.coeffs.push_back(0.0);
    for (int d = 1; d <= degree; ++d) poly.coeffs.push_back(rng.uniform(-1.0, 1.0));
    lo = hi = poly(0.0);
    for (int i = 1; i <= 64; ++i) {
      const double v = poly(i / 64.0);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  double operator()(double t) const { return hi > lo ? (poly(t) - lo) / (hi - lo) : 0.5; }
};

}  // namespace

std::vector<Point> sample_scatter_points(std::size_t n, ScatterMode mode, double min_sep_px,
                                         const Transform& projector, const DataWindow& region,
                                         Rng& rng) {
  const auto range = point_count_range(PlotType::scatter);
  if (n < range.lo || n > range.hi) throw SpecError("scatter point count outside [3, 86]");
  if (!(min_sep_px > 0)) throw SpecError("min_sep_px must be positive");

  std::vector<Point> points;
  std::vector<Point> pixels;
  points.reserve(n);
  pixels.reserve(n);
  const double width = region.xmax - region.xmin;
  const double height = region.ymax - region.ymin;

  if (mode == ScatterMode::random) {
    for (std::size_t i = 0; i < n; ++i) {
      bool placed = false;
      for (std::size_t attempt = 0; attempt < kScatterAttemptsPerPoint && !placed; ++attempt) {
        const Point p = snap_data({rng.uniform(region.xmin, region.xmax),
                                   rng.uniform(region.ymin, region.ymax)});
        const Point q = snap_px(projector.to_px(p));
        if (separated(pixels, q, min_sep_px)) {
          points.push_back(p);
          pixels.push_back(q);
          placed = true;
        }
      }
      if (!placed) throw SeparationInfeasible("no room for scatter point " + std::to_string(i));
    }
    return points;
  }

  const Trend trend(rng);
  const double noise = rng.uniform(0.01, 0.08);
  for (std::size_t i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kScatterAttemptsPerPoint && !placed; ++attempt) {
      const double t = (static_cast<double>(i) + rng.uniform()) / static_cast<double>(n);
      const double level = std::clamp(0.1 + 0.8 * trend(t) + rng.normal(0.0, noise), 0.0, 1.0);
      const Point p = snap_data({region.xmin + t * width, region.ymin + level * height});
      if (!points.empty() && !(p.x > points.back().x)) continue;
      const Point q = snap_px(projector.to_px(p));
      if (separated(pixels, q, min_sep_px)) {
        points.push_back(p);
        pixels.push_back(q);
        placed = true;
      }
    }
    if (!placed) throw SeparationInfeasible("no room for path point " + std::to_string(i));
  }
  return points;
}

}  // namespace chartgen::series
