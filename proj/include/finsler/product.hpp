#pragma once

/**
 * @file product.hpp
 * @brief The product function f(s,t) and the assembled product metric
 *        F^2 = f(K, H).
 *
 * Conventions: the first argument s is paired with the FIRST factor (s = K),
 * the second with the second (t = H).  For the linear family f = a*K + b*H,
 * a always multiplies the first factor.
 *
 * Admissibility of a product function means, sampled on a log-spaced grid:
 *   (a) f > 0 away from the origin,
 *   (b) f(ls, lt) = l f(s,t),
 *   (d) f_s != 0 and f_t != 0,
 *   (e) f_s f_t - 2 f f_st != 0.
 * Smoothness (c) is implied by expressibility in jet arithmetic.
 */

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finsler/errors.hpp"
#include "finsler/jets.hpp"
#include "finsler/metrics.hpp"

namespace finsler {

/// f and its partials in (s,t) = (K,H) through order 3.
struct PartialSet {
  double f = 0.0;
  double fK = 0.0, fH = 0.0;
  double fKK = 0.0, fKH = 0.0, fHH = 0.0;
  double fKKK = 0.0, fKKH = 0.0, fKHH = 0.0, fHHH = 0.0;
};

class ProductFunction {
 public:
  enum class Kind { Linear, LpProduct, Custom };

  static ProductFunction linear(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
      throw validation_error("linear product function: coefficients must be positive");
    ProductFunction pf;
    pf.kind_ = Kind::Linear;
    pf.a_ = a;
    pf.b_ = b;
    pf.label_ = "linear(" + std::to_string(a) + ", " + std::to_string(b) + ")";
    pf.f_ = [a, b](const Jet3& s, const Jet3& t) { return s * a + t * b; };
    return pf;
  }

  /// f(K,H) = (K^{p/2} + H^{p/2})^{2/p}, i.e. F = (Fbar^p + Ftilde^p)^{1/p}.
  static ProductFunction lp(double p) {
    if (!(p > 1.0)) throw validation_error("lp product function: p must be > 1");
    ProductFunction pf;
    pf.kind_ = Kind::LpProduct;
    pf.p_ = p;
    pf.label_ = "lp(" + std::to_string(p) + ")";
    const double q = 0.5 * p;
    pf.f_ = [q](const Jet3& s, const Jet3& t) {
      return pow(pow(s, q) + pow(t, q), 1.0 / q);
    };
    return pf;
  }

  static ProductFunction custom(std::function<Jet3(const Jet3&, const Jet3&)> f,
                                std::string label) {
    ProductFunction pf;
    pf.kind_ = Kind::Custom;
    pf.label_ = std::move(label);
    pf.f_ = std::move(f);
    return pf;
  }

  Kind kind() const { return kind_; }
  bool is_linear() const { return kind_ == Kind::Linear; }
  double linear_a() const { return a_; }
  double linear_b() const { return b_; }
  double lp_p() const { return p_; }
  const std::string& label() const { return label_; }

  Jet3 eval(const Jet3& s, const Jet3& t) const { return f_(s, t); }

  double value(double s, double t) const {
    return f_(Jet3::constant(s), Jet3::constant(t)).c0;
  }

  /// All partials through order 3 from four jet evaluations with seed
  /// patterns (s,s,s), (s,s,t), (s,t,t), (t,t,t).
  PartialSet partials(double s, double t) const {
    if (!(s > 0.0) || !(t > 0.0))
      throw inadmissible_error("product function partials need s > 0 and t > 0");
    PartialSet r;
    const Jet3 jsss = f_(Jet3::seeded(s, 1, 1, 1), Jet3::seeded(t, 0, 0, 0));
    r.f = jsss.c0;
    r.fK = jsss.c1;
    r.fKK = jsss.c12;
    r.fKKK = jsss.c123;
    const Jet3 jsst = f_(Jet3::seeded(s, 1, 1, 0), Jet3::seeded(t, 0, 0, 1));
    r.fH = jsst.c3;
    r.fKH = jsst.c13;
    r.fKKH = jsst.c123;
    const Jet3 jstt = f_(Jet3::seeded(s, 1, 0, 0), Jet3::seeded(t, 0, 1, 1));
    r.fHH = jstt.c23;
    r.fKHH = jstt.c123;
    const Jet3 jttt = f_(Jet3::seeded(s, 0, 0, 0), Jet3::seeded(t, 1, 1, 1));
    r.fHHH = jttt.c123;
    return r;
  }

  /// Admissibility scalar f_K f_H - 2 f f_KH; throws when it vanishes
  /// relative to the magnitude of its terms (condition (e) fails here).
  double delta(double s, double t) const {
    const PartialSet p = partials(s, t);
    return delta_from(p);
  }

  static double delta_from(const PartialSet& p) {
    const double d = p.fK * p.fH - 2.0 * p.f * p.fKH;
    const double scale = std::abs(p.fK * p.fH) + std::abs(2.0 * p.f * p.fKH);
    if (std::abs(d) < 1e-12 * scale)
      throw inadmissible_error("admissibility scalar f_K f_H - 2 f f_KH vanishes at this point");
    return d;
  }

  /// Residuals of the homogeneity identities, each normalized by the sum of
  /// the magnitudes of its terms:
  ///   [0]  f_K K + f_H H - f
  ///   [1]  f_KK K + f_KH H
  ///   [2]  f_KH K + f_HH H
  ///   [3]  f_KH^2 - f_KK f_HH
  std::array<double, 4> euler_residuals(double s, double t) const {
    const PartialSet p = partials(s, t);
    auto rel = [](double resid, double scale) {
      return scale > 1e-300 ? std::abs(resid) / scale : std::abs(resid);
    };
    std::array<double, 4> r{};
    r[0] = rel(p.fK * s + p.fH * t - p.f,
               std::abs(p.fK * s) + std::abs(p.fH * t) + std::abs(p.f));
    r[1] = rel(p.fKK * s + p.fKH * t, std::abs(p.fKK * s) + std::abs(p.fKH * t));
    r[2] = rel(p.fKH * s + p.fHH * t, std::abs(p.fKH * s) + std::abs(p.fHH * t));
    r[3] = rel(p.fKH * p.fKH - p.fKK * p.fHH,
               p.fKH * p.fKH + std::abs(p.fKK * p.fHH));
    return r;
  }

 private:
  Kind kind_ = Kind::Custom;
  double a_ = 0.0, b_ = 0.0, p_ = 0.0;
  std::string label_;
  std::function<Jet3(const Jet3&, const Jet3&)> f_;
};

// ---------------------------------------------------------------------------
// Sampled admissibility conditions (a), (b), (d), (e)
// ---------------------------------------------------------------------------

struct ConditionReport {
  bool positivity = true;      // (a) on the grid
  bool homogeneity = true;     // (b)
  bool partials_nonzero = true;  // (d)
  bool delta_nonzero = true;     // (e)
  double worst_homogeneity = 0.0;
  std::string detail;

  bool all_pass() const {
    return positivity && homogeneity && partials_nonzero && delta_nonzero;
  }
};

inline ConditionReport check_conditions(const ProductFunction& pf, int grid = 16,
                                        double lo = 1e-2, double hi = 1e2) {
  ConditionReport rep;
  const double step = std::log(hi / lo) / (grid - 1);
  for (int i = 0; i < grid && rep.all_pass(); ++i) {
    for (int j = 0; j < grid; ++j) {
      const double s = lo * std::exp(step * i);
      const double t = lo * std::exp(step * j);
      PartialSet p;
      try {
        p = pf.partials(s, t);
      } catch (const inadmissible_error& e) {
        rep.positivity = false;
        rep.detail = "evaluation failed at (" + std::to_string(s) + ", " + std::to_string(t) + "): " + e.what();
        break;
      }
      if (!(p.f > 0.0)) {
        rep.positivity = false;
        rep.detail = "f <= 0 at (" + std::to_string(s) + ", " + std::to_string(t) + ")";
        break;
      }
      for (double l : {0.5, 2.0}) {
        const double v = pf.value(l * s, l * t);
        const double r = std::abs(v - l * p.f) / std::max(std::abs(l * p.f), 1e-300);
        rep.worst_homogeneity = std::max(rep.worst_homogeneity, r);
        if (r > 1e-9) {
          rep.homogeneity = false;
          rep.detail = "f(l s, l t) != l f(s,t) at (" + std::to_string(s) + ", " +
                       std::to_string(t) + "), rel residual " + std::to_string(r);
        }
      }
      const double grad_scale = std::abs(p.fK) + std::abs(p.fH);
      if (std::abs(p.fK) <= 1e-12 * grad_scale || std::abs(p.fH) <= 1e-12 * grad_scale) {
        rep.partials_nonzero = false;
        rep.detail = "a first partial vanishes at (" + std::to_string(s) + ", " + std::to_string(t) + ")";
        break;
      }
      const double d = p.fK * p.fH - 2.0 * p.f * p.fKH;
      const double dscale = std::abs(p.fK * p.fH) + std::abs(2.0 * p.f * p.fKH);
      if (std::abs(d) < 1e-12 * dscale) {
        rep.delta_nonzero = false;
        rep.detail = "admissibility scalar vanishes at (" + std::to_string(s) + ", " + std::to_string(t) + ")";
        break;
      }
      if (!rep.homogeneity) break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Product metric
// ---------------------------------------------------------------------------

struct ProductMetric {
  MetricSpec factor1, factor2;
  ProductFunction pf;

  ProductMetric(MetricSpec f1, MetricSpec f2, ProductFunction f)
      : factor1(std::move(f1)), factor2(std::move(f2)), pf(std::move(f)) {}

  int m() const { return factor1.dim; }
  int n() const { return factor2.dim; }
  int dim() const { return factor1.dim + factor2.dim; }

  /// F^2 as a field on the (m+n)-dimensional product fiber.
  ScalarField field() const {
    const ScalarField k = factor1.f2;
    const ScalarField h = factor2.f2;
    const ProductFunction f = pf;
    const int m = factor1.dim;
    return [k, h, f, m](std::span<const Jet3> y) {
      const Jet3 s = k(y.subspan(0, static_cast<std::size_t>(m)));
      const Jet3 t = h(y.subspan(static_cast<std::size_t>(m)));
      return f.eval(s, t);
    };
  }
};

/// F^2(y) = f(K(y_bar), H(y_tilde)) for y in the product domain.
inline double product_f2(const ProductMetric& pm, const TangentSample& y) {
  if (static_cast<int>(y.y_bar.size()) != pm.m() ||
      static_cast<int>(y.y_tilde.size()) != pm.n())
    throw validation_error("product_f2: sample dimensions do not match the metric");
  const double k = k_value(pm.factor1, y.y_bar);
  const double h = k_value(pm.factor2, y.y_tilde);
  return pm.pf.value(k, h);
}

}  // namespace finsler
