#pragma once

/**
 * @file sampling.hpp
 * @brief Deterministic sampling of fiber directions.
 *
 * A small hand-rolled generator (splitmix64) is used instead of <random>
 * distributions so that identical seeds give byte-identical reports across
 * platforms and standard-library versions.
 */

#include <cmath>
#include <cstdint>
#include <vector>

#include "finsler/errors.hpp"
#include "finsler/metrics.hpp"

namespace finsler {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double log_uniform(double a, double b) {
    return a * std::exp(uniform01() * std::log(b / a));
  }

  /// Standard normal via Box-Muller (one value per call; the pair partner
  /// is cached).
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925287 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  /// Uniform direction on the unit sphere in R^dim.
  Vec unit_vector(int dim) {
    while (true) {
      Vec v(static_cast<std::size_t>(dim));
      double norm2 = 0.0;
      for (double& x : v) {
        x = gaussian();
        norm2 += x * x;
      }
      if (norm2 < 1e-24) continue;
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& x : v) x *= inv;
      return v;
    }
  }

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Sampling plan for product-fiber directions: independent uniform sphere
/// directions per factor, each scaled by a log-uniform radius.
struct SamplePlan {
  int count = 50;
  std::uint64_t seed = 42;
  double radius_min = 0.31622776601683794;  // 10^-1/2
  double radius_max = 3.1622776601683795;   // 10^+1/2
};

inline std::vector<TangentSample> make_samples(const SamplePlan& plan, int m, int n) {
  if (plan.count < 1) throw validation_error("sample plan: count must be >= 1");
  if (!(plan.radius_min > 0.0) || !(plan.radius_max >= plan.radius_min))
    throw validation_error("sample plan: invalid radius range");
  Rng rng(plan.seed);
  std::vector<TangentSample> out;
  out.reserve(static_cast<std::size_t>(plan.count));
  for (int k = 0; k < plan.count; ++k) {
    Vec yb = rng.unit_vector(m);
    Vec yt = rng.unit_vector(n);
    const double rb = rng.log_uniform(plan.radius_min, plan.radius_max);
    const double rt = rng.log_uniform(plan.radius_min, plan.radius_max);
    for (double& v : yb) v *= rb;
    for (double& v : yt) v *= rt;
    out.emplace_back(std::move(yb), std::move(yt));
  }
  return out;
}

/// Directions on the unit sphere of one factor.
inline std::vector<Vec> make_directions(int dim, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) out.push_back(rng.unit_vector(dim));
  return out;
}

}  // namespace finsler
