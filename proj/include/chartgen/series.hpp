#pragma once

#include <cstddef>
#include <vector>

#include "chartgen/geometry.hpp"
#include "chartgen/rng.hpp"
#include "chartgen/types.hpp"

namespace chartgen::series {

inline constexpr double kMinScale = 0.01;
inline constexpr double kMaxScale = 1'000'000.0;
inline constexpr double kMaxNoiseRel = 0.08;
inline constexpr double kBarMaxRatio = 200.0;
// Bars are shifted to a floor of max/199.5 so that rounding stored values to
// four significant digits cannot push the ratio past 200.
inline constexpr double kBarFloorRatio = 199.5;
inline constexpr int kDotMin = 1;
inline constexpr int kDotMax = 10;

enum class Sampler { linear, polynomial };

struct SeriesParams {
  Sampler sampler = Sampler::linear;
  int degree = 1;
  double noise_sigma_rel = 0.0;
  double scale_factor = 1.0;
  double outlier_prob = 0.1;
  ValueKind value_kind = ValueKind::real;

  // Throws SpecError when a field is out of range.
  void validate() const;
};

struct NumericSeries {
  std::vector<double> values;
  ValueKind kind = ValueKind::real;
  friend bool operator==(const NumericSeries&, const NumericSeries&) = default;
};

// c0 + c1 x + c2 x^2 + ...
struct Polynomial {
  std::vector<double> coeffs;
  double operator()(double x) const;
};

struct Interval {
  double lo;
  double hi;
};

SeriesParams sample_params(Rng& rng, double outlier_prob = 0.1);

// Random-coefficient base signal for the given sampler and degree.
Polynomial sample_base(const SeriesParams& params, Rng& rng);

// scale * (base(x_i) + noise_i) at x_i = i/(n-1), noise sigma relative to the
// base range over the sample points. Integer kind rounds at the end.
NumericSeries realize_series(const Polynomial& base, const SeriesParams& params, std::size_t n,
                             Rng& rng);
NumericSeries sample_series(const SeriesParams& params, std::size_t n, Rng& rng);

// With probability `prob`, one or two positions are multiplied by a factor
// drawn from `factor_range` (which must lie inside [1.5, 10]).
NumericSeries inject_outliers(NumericSeries series, double prob, Interval factor_range, Rng& rng);

// Bars: strictly positive, max/min <= 200, rank order kept.
// Dot: integers in [1, 10]. Scatter and line pass through. Idempotent.
NumericSeries enforce_constraints(PlotType type, NumericSeries series);

// Round reals to the metadata precision so stored and rendered values agree.
NumericSeries quantize(NumericSeries series);

// Truncated discrete triangular law over [lo, hi] with the given mode.
std::size_t triangular_count(std::size_t lo, std::size_t mode, std::size_t hi, Rng& rng);

struct CountRange {
  std::size_t lo;
  std::size_t hi;
};
CountRange point_count_range(PlotType type);
// Bars peak at 6, lines at 7; scatter and dot are uniform.
std::size_t sample_point_count(PlotType type, Rng& rng);

enum class ScatterMode { random, path };

inline constexpr std::size_t kScatterAttemptsPerPoint = 1000;

// n points inside `region` whose snapped pixel images under `projector` are
// pairwise at least `min_sep_px` apart. Coordinates are rounded to metadata
// precision before the distance test. Path mode yields strictly increasing x
// along a polynomial trend. Throws SeparationInfeasible.
std::vector<Point> sample_scatter_points(std::size_t n, ScatterMode mode, double min_sep_px,
                                         const Transform& projector, const DataWindow& region,
                                         Rng& rng);

}  // namespace chartgen::series
