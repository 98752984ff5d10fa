#include <array>
#include <cmath>
#include <limits>

#include "chartgen/errors.hpp"
#include "chartgen/layout.hpp"

namespace chartgen::layout {
namespace {

constexpr std::array<double, 4> kMantissas{1.0, 2.0, 2.5, 5.0};
constexpr double kEps = 1e-9;

struct Candidate {
  double mantissa;
  int exponent;
  long long first;
  long long last;

  double step() const { return mantissa * std::pow(10.0, exponent); }
  long long intervals() const { return last - first; }
};

Candidate make(double mantissa, int exponent, double vmin, double vmax) {
  const double s = mantissa * std::pow(10.0, exponent);
  return {mantissa, exponent, static_cast<long long>(std::floor(vmin / s + kEps)),
          static_cast<long long>(std::ceil(vmax / s - kEps))};
}

// i * mantissa * 10^exponent without accumulating error.
double tick_value(long long i, double mantissa, int exponent) {
  const double scaled = static_cast<double>(i) * mantissa;
  const double v = exponent >= 0 ? scaled * std::pow(10.0, exponent)
                                 : scaled / std::pow(10.0, -exponent);
  return v == 0.0 ? 0.0 : v;
}

}  // namespace

std::vector<double> nice_ticks(double vmin, double vmax, int target) {
  if (!std::isfinite(vmin) || !std::isfinite(vmax) || vmin > vmax) {
    throw SpecError("nice_ticks needs finite vmin <= vmax");
  }
  if (target < 1) target = 1;
  if (vmin == vmax) {
    const double d = std::max(1.0, std::fabs(vmin) * 0.1);
    vmin -= d;
    vmax += d;
  }
  const double raw = (vmax - vmin) / target;
  const int k = static_cast<int>(std::floor(std::log10(raw)));

  Candidate best{};
  long long best_diff = std::numeric_limits<long long>::max();
  double best_step = 0;
  for (int e = k - 1; e <= k + 1; ++e) {
    for (double m : kMantissas) {
      const Candidate c = make(m, e, vmin, vmax);
      const long long diff = std::llabs(c.intervals() - target);
      const double s = c.step();
      if (diff < best_diff || (diff == best_diff && s < best_step)) {
        best = c;
        best_diff = diff;
        best_step = s;
      }
    }
  }
  std::vector<double> ticks;
  for (long long i = best.first; i <= best.last; ++i) {
    ticks.push_back(tick_value(i, best.mantissa, best.exponent));
  }
  return ticks;
}

}  // namespace chartgen::layout
