#include "chartgen/series.hpp"

#include <algorithm>
#include <cmath>

#include "chartgen/errors.hpp"
#include "chartgen/metadata.hpp"

namespace chartgen::series {
namespace {

bool all_integers_in(const std::vector<double>& v, double lo, double hi) {
  return std::all_of(v.begin(), v.end(),
                     [&](double x) { return x == std::round(x) && x >= lo && x <= hi; });
}

NumericSeries enforce_bar(NumericSeries s) {
  auto& v = s.values;
  if (v.empty()) return s;
  const bool integer = s.kind == ValueKind::integer;
  if (integer) {
    for (double& x : v) x = std::round(x);
  }
  const auto [mn_it, mx_it] = std::minmax_element(v.begin(), v.end());
  const double mn = *mn_it;
  const double mx = *mx_it;
  if (mn > 0) {
    if (integer ? mx <= mn * kBarMaxRatio : mx <= mn * kBarFloorRatio * (1 + 1e-12)) return s;
  }

  double top = mx > 0 ? mx : (mx - mn > 0 ? mx - mn : 1.0);
  double floor;
  if (integer) {
    top = std::max(1.0, std::round(top));
    floor = std::ceil(top / kBarMaxRatio);
  } else {
    floor = top / kBarFloorRatio;
  }
  for (double& x : v) {
    if (x == mx) {
      x = top;
    } else {
      x = floor + (x - mn) * (top - floor) / (mx - mn);
      if (integer) x = std::round(x);
    }
  }
  return s;
}

NumericSeries enforce_dot(NumericSeries s) {
  auto& v = s.values;
  s.kind = ValueKind::integer;
  if (all_integers_in(v, kDotMin, kDotMax)) return s;
  std::vector<double> rounded(v.size());
  std::transform(v.begin(), v.end(), rounded.begin(), [](double x) { return std::round(x); });
  if (all_integers_in(rounded, kDotMin, kDotMax)) {
    v = std::move(rounded);
    return s;
  }
  const auto [mn_it, mx_it] = std::minmax_element(v.begin(), v.end());
  const double mn = *mn_it;
  const double mx = *mx_it;
  for (double& x : v) {
    if (mx == mn) {
      x = std::clamp(std::round(x), double(kDotMin), double(kDotMax));
    } else {
      x = std::round(kDotMin + (x - mn) * (kDotMax - kDotMin) / (mx - mn));
    }
  }
  return s;
}

}  // namespace

void SeriesParams::validate() const {
  if (!(scale_factor >= kMinScale && scale_factor <= kMaxScale)) {
    throw SpecError("scale_factor outside [0.01, 1e6]");
  }
  if (degree < 1 || degree > 4) throw SpecError("degree outside [1, 4]");
  if (sampler == Sampler::linear && degree != 1) throw SpecError("linear sampler has degree 1");
  if (!(noise_sigma_rel >= 0)) throw SpecError("negative noise");
  if (!(outlier_prob >= 0 && outlier_prob <= 1)) throw SpecError("outlier_prob outside [0, 1]");
}

double Polynomial::operator()(double x) const {
  double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

SeriesParams sample_params(Rng& rng, double outlier_prob) {
  SeriesParams p;
  p.sampler = rng.bernoulli(0.4) ? Sampler::linear : Sampler::polynomial;
  p.degree = p.sampler == Sampler::linear ? 1 : static_cast<int>(rng.uniform_int(2, 4));
  p.noise_sigma_rel = rng.uniform(0.0, kMaxNoiseRel);
  p.scale_factor = std::clamp(rng.log_uniform(kMinScale, kMaxScale), kMinScale, kMaxScale);
  p.outlier_prob = outlier_prob;
  // Integers only once the scale leaves room for distinct values.
  p.value_kind = p.scale_factor >= 10 && rng.bernoulli(0.5) ? ValueKind::integer : ValueKind::real;
  return p;
}

Polynomial sample_base(const SeriesParams& params, Rng& rng) {
  Polynomial poly;
  if (params.sampler == Sampler::linear) {
    const double intercept = rng.uniform(0.0, 1.0);
    double slope = rng.uniform(0.1, 2.0);
    if (rng.bernoulli(0.5)) slope = -slope;
    poly.coeffs = {intercept, slope};
    return poly;
  }
  poly.coeffs.push_back(rng.uniform(0.0, 1.0));
  for (int d = 1; d < params.degree; ++d) poly.coeffs.push_back(rng.uniform(-1.0, 1.0));
  double lead = rng.uniform(0.1, 1.0);
  if (rng.bernoulli(0.5)) lead = -lead;
  poly.coeffs.push_back(lead);
  return poly;
}

NumericSeries realize_series(const Polynomial& base, const SeriesParams& params, std::size_t n,
                             Rng& rng) {
  params.validate();
  if (n == 0) throw SpecError("series needs at least one point");
  std::vector<double> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    b[i] = base(x);
  }
  const auto [mn, mx] = std::minmax_element(b.begin(), b.end());
  const double sigma = params.noise_sigma_rel * (*mx - *mn);

  NumericSeries out;
  out.kind = params.value_kind;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double eps = sigma > 0 ? rng.normal(0.0, sigma) : 0.0;
    double v = params.scale_factor * (b[i] + eps);
    if (out.kind == ValueKind::integer) v = std::round(v);
    out.values[i] = v;
  }
  return out;
}

NumericSeries sample_series(const SeriesParams& params, std::size_t n, Rng& rng) {
  const Polynomial base = sample_base(params, rng);
  return realize_series(base, params, n, rng);
}

NumericSeries inject_outliers(NumericSeries series, double prob, Interval factor_range, Rng& rng) {
  if (factor_range.lo > factor_range.hi || factor_range.lo < 1.5 || factor_range.hi > 10) {
    throw SpecError("outlier factor range must lie inside [1.5, 10]");
  }
  auto& v = series.values;
  if (v.empty() || !rng.bernoulli(prob)) return series;
  const std::size_t count = v.size() == 1 ? 1 : static_cast<std::size_t>(rng.uniform_int(1, 2));
  const std::size_t first = rng.index(v.size());
  std::size_t second = first;
  if (count == 2) {
    second = rng.index(v.size() - 1);
    if (second >= first) ++second;
  }
  const std::size_t positions[2] = {first, second};
  for (std::size_t k = 0; k < count; ++k) {
    double& x = v[positions[k]];
    x *= rng.uniform(factor_range.lo, factor_range.hi);
    if (series.kind == ValueKind::integer) x = std::round(x);
  }
  return series;
}

NumericSeries enforce_constraints(PlotType type, NumericSeries series) {
  switch (type) {
    case PlotType::vbar:
    case PlotType::hbar: return enforce_bar(std::move(series));
    case PlotType::dot: return enforce_dot(std::move(series));
    case PlotType::scatter:
    case PlotType::line: return series;
  }
  return series;
}

NumericSeries quantize(NumericSeries series) {
  for (double& v : series.values) {
    v = series.kind == ValueKind::integer ? std::round(v) : metadata::round_significant(v);
    if (v == 0.0) v = 0.0;
  }
  return series;
}

std::size_t triangular_count(std::size_t lo, std::size_t mode, std::size_t hi, Rng& rng) {
  if (!(lo <= mode && mode <= hi)) throw SpecError("triangular mode outside range");
  std::vector<double> w;
  for (std::size_t k = lo; k <= hi; ++k) {
    if (k <= mode) {
      w.push_back(static_cast<double>(k - lo + 1) / static_cast<double>(mode - lo + 1));
    } else {
      w.push_back(static_cast<double>(hi - k + 1) / static_cast<double>(hi - mode + 1));
    }
  }
  return lo + rng.weighted(w);
}

CountRange point_count_range(PlotType type) {
  switch (type) {
    case PlotType::vbar:
    case PlotType::hbar:
    case PlotType::line: return {2, 20};
    case PlotType::scatter: return {3, 86};
    case PlotType::dot: return {2, 21};
  }
  return {1, 1};
}

std::size_t sample_point_count(PlotType type, Rng& rng) {
  const auto r = point_count_range(type);
  switch (type) {
    case PlotType::vbar:
    case PlotType::hbar: return triangular_count(r.lo, 6, r.hi, rng);
    case PlotType::line: return triangular_count(r.lo, 7, r.hi, rng);
    default:
      return static_cast<std::size_t>(
          rng.uniform_int(static_cast<std::int64_t>(r.lo), static_cast<std::int64_t>(r.hi)));
  }
}

}  // namespace chartgen::series
