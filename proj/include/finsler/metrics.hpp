#pragma once

/**
 * @file metrics.hpp
 * @brief Factor metrics supplying the squared norm F^2 as a jet-differentiable
 *        scalar field, with admissibility checks.
 *
 * Every metric is frozen at one working base point: the coefficient data
 * (matrix, covector, custom expression) fully determines the fiber norm, and
 * all tensor work downstream is in the fiber variable y only.
 */

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finsler/errors.hpp"
#include "finsler/jets.hpp"
#include "finsler/linalg.hpp"

namespace finsler {

/// Type-erased factor metric: dimension plus the F^2 field.
struct MetricSpec {
  int dim = 0;
  std::string label;
  ScalarField f2;
  bool riemannian = false;                 ///< exact-zero Cartan tensor expected
  std::optional<double> randers_b_norm;    ///< set for Randers factors
};

inline void require_nonzero(std::span<const double> y, const char* what) {
  for (double v : y)
    if (v != 0.0) return;
  throw inadmissible_error(std::string(what) + " is the zero vector (outside the admissible domain)");
}

/// F^2(y), positive for y != 0.
inline double k_value(const MetricSpec& metric, std::span<const double> y) {
  if (static_cast<int>(y.size()) != metric.dim)
    throw validation_error("k_value: dimension mismatch");
  require_nonzero(y, "tangent vector");
  return field_value(metric.f2, y);
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace detail {

inline ScalarField quadratic_form_field(Matrix a) {
  return [a = std::move(a)](std::span<const Jet3> y) {
    Jet3 q;
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j)
        if (a(i, j) != 0.0) q += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] * a(i, j);
    return q;
  };
}

inline void require_spd(const Matrix& a, const char* what) {
  if (a.rows != a.cols) throw validation_error(std::string(what) + ": matrix not square");
  if (!is_symmetric(a, 1e-10)) throw validation_error(std::string(what) + ": matrix not symmetric");
  const Vec ev = sym_eigenvalues(a);
  if (ev.empty() || !(ev.front() > 0.0))
    throw validation_error(std::string(what) + ": matrix not positive definite");
}

}  // namespace detail

struct RiemannianMetric {
  Matrix a;

  explicit RiemannianMetric(Matrix coeffs) : a(std::move(coeffs)) {
    if (a.rows < 1) throw validation_error("riemannian: dimension must be >= 1");
    detail::require_spd(a, "riemannian");
  }

  MetricSpec spec() const {
    MetricSpec s;
    s.dim = a.rows;
    s.label = "riemannian(" + std::to_string(a.rows) + ")";
    s.f2 = detail::quadratic_form_field(a);
    s.riemannian = true;
    return s;
  }
};

inline MetricSpec euclidean_metric(int dim) {
  RiemannianMetric m(Matrix::identity(dim));
  MetricSpec s = m.spec();
  s.label = "euclidean(" + std::to_string(dim) + ")";
  return s;
}

inline MetricSpec riemannian_metric(Matrix a) { return RiemannianMetric(std::move(a)).spec(); }

/// F = sqrt(a(y,y)) + b(y) with |b|_a < 1.
struct RandersMetric {
  Matrix a;
  Vec b;
  double b_norm = 0.0;

  RandersMetric(Matrix alpha, Vec beta) : a(std::move(alpha)), b(std::move(beta)) {
    if (a.rows < 1) throw validation_error("randers: dimension must be >= 1");
    detail::require_spd(a, "randers");
    if (static_cast<int>(b.size()) != a.rows)
      throw validation_error("randers: covector dimension mismatch");
    const Matrix ai = inverse(a);
    double q = 0.0;
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j)
        q += ai(i, j) * b[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    b_norm = std::sqrt(std::max(0.0, q));
    if (!(b_norm < 1.0))
      throw validation_error("randers: |b|_a = " + std::to_string(b_norm) +
                             " violates strong convexity (must be < 1)");
  }

  MetricSpec spec() const {
    MetricSpec s;
    s.dim = a.rows;
    s.label = "randers(" + std::to_string(a.rows) + ", |b|=" + std::to_string(b_norm) + ")";
    auto quad = detail::quadratic_form_field(a);
    Vec bv = b;
    s.f2 = [quad, bv](std::span<const Jet3> y) {
      Jet3 lin;
      for (std::size_t i = 0; i < bv.size(); ++i) lin += y[i] * bv[i];
      const Jet3 f = sqrt(quad(y)) + lin;
      return f * f;
    };
    s.riemannian = (b_norm == 0.0);
    s.randers_b_norm = b_norm;
    return s;
  }
};

// ---------------------------------------------------------------------------
// Sampled admissibility checks
// ---------------------------------------------------------------------------

/// Half Hessian of F^2 at y, via jets.
inline Matrix fundamental_form(const MetricSpec& metric, std::span<const double> y) {
  const int n = metric.dim;
  Matrix g(n, n);
  Vec d1(static_cast<std::size_t>(n), 0.0), d2(static_cast<std::size_t>(n), 0.0);
  const Vec zero(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    d1[static_cast<std::size_t>(i)] = 1.0;
    for (int j = i; j < n; ++j) {
      d2[static_cast<std::size_t>(j)] = 1.0;
      const Jet3 jt = jet_eval(metric.f2, y, d1, d2, zero);
      g(i, j) = g(j, i) = 0.5 * jt.c12;
      d2[static_cast<std::size_t>(j)] = 0.0;
    }
    d1[static_cast<std::size_t>(i)] = 0.0;
  }
  return g;
}

struct ConvexityReport {
  bool pass = true;
  double min_eigenvalue = 0.0;
  int worst_sample = -1;
};

/// Smallest eigenvalue of the half Hessian of F^2 over the sampled directions.
inline ConvexityReport strong_convexity_check(const MetricSpec& metric,
                                              std::span<const Vec> samples) {
  if (samples.empty()) throw validation_error("strong_convexity_check: no samples");
  ConvexityReport rep;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    require_nonzero(samples[k], "convexity sample");
    const Matrix g = fundamental_form(metric, samples[k]);
    const Vec ev = sym_eigenvalues(g);
    if (ev.front() < rep.min_eigenvalue) {
      rep.min_eigenvalue = ev.front();
      rep.worst_sample = static_cast<int>(k);
    }
  }
  rep.pass = rep.min_eigenvalue > 0.0;
  return rep;
}

struct HomogeneityReport {
  bool pass = true;
  double max_rel_residual = 0.0;
};

/// Sampled check of F^2(ly) = l^2 F^2(y).
inline HomogeneityReport homogeneity_check(const MetricSpec& metric,
                                           std::span<const Vec> samples,
                                           std::span<const double> lambdas,
                                           double tol = 1e-9) {
  HomogeneityReport rep;
  Vec scaled(static_cast<std::size_t>(metric.dim));
  for (const Vec& y : samples) {
    const double base = k_value(metric, y);
    for (double l : lambdas) {
      for (std::size_t i = 0; i < y.size(); ++i) scaled[i] = l * y[i];
      const double v = k_value(metric, scaled);
      const double r = std::abs(v - l * l * base) / std::max(std::abs(l * l * base), 1e-300);
      rep.max_rel_residual = std::max(rep.max_rel_residual, r);
    }
  }
  rep.pass = rep.max_rel_residual <= tol;
  return rep;
}

/// Deterministic direction set used by construction-time checks (golden-angle
/// style spread, no RNG dependence here).
inline std::vector<Vec> probe_directions(int dim, int count) {
  std::vector<Vec> dirs;
  dirs.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    Vec d(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double t = 0.7548776662466927 * (k + 1) * (i + 1) + 0.11 * (i + 1);
      d[static_cast<std::size_t>(i)] = std::cos(6.283185307179586 * (t - std::floor(t)));
      norm2 += d[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i)];
    }
    if (norm2 < 1e-12) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : d) v *= inv;
    dirs.push_back(std::move(d));
  }
  return dirs;
}

/// User-defined F^2 field.  Validation samples 2-homogeneity and strong
/// convexity (32 directions per dimension by default); pass validate=false
/// only for deliberate negative controls.
inline MetricSpec custom_metric(int dim, ScalarField f2, std::string label,
                                bool validate = true, int dirs_per_dim = 32) {
  if (dim < 1) throw validation_error("custom metric: dimension must be >= 1");
  MetricSpec s;
  s.dim = dim;
  s.label = std::move(label);
  s.f2 = std::move(f2);
  s.riemannian = false;
  if (validate) {
    const std::vector<Vec> dirs = probe_directions(dim, dirs_per_dim * dim);
    const double lambdas[] = {0.5, 2.0};
    const HomogeneityReport h = homogeneity_check(s, dirs, lambdas);
    if (!h.pass)
      throw validation_error("custom metric '" + s.label +
                             "': F^2 is not 2-homogeneous (max rel residual " +
                             std::to_string(h.max_rel_residual) + ")");
    const ConvexityReport c = strong_convexity_check(s, dirs);
    if (!c.pass)
      throw validation_error("custom metric '" + s.label +
                             "': fundamental form not positive definite (min eig " +
                             std::to_string(c.min_eigenvalue) + ")");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Product-domain sample
// ---------------------------------------------------------------------------

/// A direction in the product fiber; both components must be nonzero.
struct TangentSample {
  Vec y_bar, y_tilde;

  TangentSample(Vec yb, Vec yt) : y_bar(std::move(yb)), y_tilde(std::move(yt)) {
    require_nonzero(y_bar, "factor-1 component of the tangent vector");
    require_nonzero(y_tilde, "factor-2 component of the tangent vector");
  }

  Vec joined() const {
    Vec y = y_bar;
    y.insert(y.end(), y_tilde.begin(), y_tilde.end());
    return y;
  }
};

}  // namespace finsler
