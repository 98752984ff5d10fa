#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace chartgen {

// SplitMix64 finalizer (Steele, Lea, Flood). Constants:
//   0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9, 0x94D049BB133111EB.
std::uint64_t splitmix64(std::uint64_t x);

// Order-sensitive combination of two 64-bit values. Used for per-chart and
// per-attempt seed derivation so results never depend on scheduling.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Random stream with portable distributions. std::*_distribution output is
// implementation-defined, so only the engine is taken from the standard
// library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  // Uniform over the closed range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(size) - 1)); }
  bool bernoulli(double p) { return uniform() < p; }
  double normal(double mean, double sigma);
  // log-uniform over [lo, hi], lo > 0.
  double log_uniform(double lo, double hi);
  // Discrete draw proportional to non-negative weights.
  std::size_t weighted(std::span<const double> weights);

  template <class T>
  const T& pick(std::span<const T> items) {
    return items[index(items.size())];
  }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[index(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chartgen
