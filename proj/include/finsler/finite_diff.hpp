#pragma once

/**
 * @file finite_diff.hpp
 * @brief Central-difference oracle for third mixed partials.
 *
 * Independent of the jet arithmetic: used only to cross-check it.  The
 * estimator composes three central-difference operators, which reduces to
 * the familiar wide stencils for repeated indices and keeps the leading
 * error at O(step^2).
 */

#include <cmath>
#include <span>
#include <vector>

#include "finsler/errors.hpp"
#include "finsler/jets.hpp"

namespace finsler {

/// Central-difference estimate of d^3 field / dy_i dy_j dy_k at y.
inline double fd_third(const ScalarField& field, std::span<const double> y,
                       int i, int j, int k, double step) {
  if (!(step > 0.0)) throw validation_error("fd_third: step must be positive");
  std::vector<double> p(y.begin(), y.end());
  double acc = 0.0;
  for (int s1 = -1; s1 <= 1; s1 += 2)
    for (int s2 = -1; s2 <= 1; s2 += 2)
      for (int s3 = -1; s3 <= 1; s3 += 2) {
        p.assign(y.begin(), y.end());
        p[static_cast<std::size_t>(i)] += s1 * step;
        p[static_cast<std::size_t>(j)] += s2 * step;
        p[static_cast<std::size_t>(k)] += s3 * step;
        const double v = field_value(field, p);
        if (!std::isfinite(v))
          throw inadmissible_error("fd_third: non-finite field value in the stencil");
        acc += s1 * s2 * s3 * v;
      }
  return acc / (8.0 * step * step * step);
}

/// Default step for third differences, scaled by the point magnitude.
inline double fd_default_step(std::span<const double> y) {
  double m = 0.0;
  for (double v : y) m = std::max(m, std::abs(v));
  return 1e-3 * std::max(1.0, m);
}

/// One Richardson refinement of the O(step^2) estimate: combining the
/// estimates at step and step/2 cancels the leading error term.
inline double fd_third_richardson(const ScalarField& field, std::span<const double> y,
                                  int i, int j, int k, double step = 0.0) {
  const double h = step > 0.0 ? step : fd_default_step(y);
  const double d1 = fd_third(field, y, i, j, k, h);
  const double d2 = fd_third(field, y, i, j, k, 0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace finsler
