#pragma once

/**
 * @file jets.hpp
 * @brief Exact forward-mode differentiation through order 3.
 *
 * A Jet3 is an element of the truncated polynomial ring
 *
 *     R[e1, e2, e3] / (e1^2, e2^2, e3^2),
 *
 * i.e. a value plus one coefficient per nonempty subset of three
 * nilpotent generators.  Seeding the generators with directions d1, d2,
 * d3 and pushing a smooth expression through the ring arithmetic yields
 * the mixed partials of
 *
 *     (t1, t2, t3) |-> field(y + t1 d1 + t2 d2 + t3 d3)
 *
 * at t = 0 through order (1,1,1), exact to rounding.  Because every
 * generator squares to zero there are no factorials to track: c12 is
 * literally d^2/dt1 dt2, and c123 is the full third mixed partial.
 */

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "finsler/errors.hpp"

namespace finsler {

struct Jet3 {
  double c0 = 0.0;            ///< value
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  double c12 = 0.0, c13 = 0.0, c23 = 0.0;
  double c123 = 0.0;

  Jet3() = default;
  Jet3(double v) : c0(v) {}
  Jet3(double v, double d1, double d2, double d3, double d12, double d13,
       double d23, double d123)
      : c0(v), c1(d1), c2(d2), c3(d3), c12(d12), c13(d13), c23(d23), c123(d123) {}

  static Jet3 constant(double v) { return Jet3(v); }

  /// Independent variable with derivative d_k along generator k.
  static Jet3 seeded(double v, double d1, double d2, double d3) {
    Jet3 j(v);
    j.c1 = d1;
    j.c2 = d2;
    j.c3 = d3;
    return j;
  }

  Jet3 operator-() const {
    return {-c0, -c1, -c2, -c3, -c12, -c13, -c23, -c123};
  }

  Jet3& operator+=(const Jet3& o) {
    c0 += o.c0; c1 += o.c1; c2 += o.c2; c3 += o.c3;
    c12 += o.c12; c13 += o.c13; c23 += o.c23; c123 += o.c123;
    return *this;
  }
  Jet3& operator-=(const Jet3& o) {
    c0 -= o.c0; c1 -= o.c1; c2 -= o.c2; c3 -= o.c3;
    c12 -= o.c12; c13 -= o.c13; c23 -= o.c23; c123 -= o.c123;
    return *this;
  }
  Jet3& operator*=(double s) {
    c0 *= s; c1 *= s; c2 *= s; c3 *= s;
    c12 *= s; c13 *= s; c23 *= s; c123 *= s;
    return *this;
  }

  friend Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
  friend Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }
  friend Jet3 operator*(Jet3 a, double s) { return a *= s; }
  friend Jet3 operator*(double s, Jet3 a) { return a *= s; }
  friend Jet3 operator/(Jet3 a, double s) { return a *= (1.0 / s); }

  /// Leibniz product: coefficient of a generator set S is the sum of
  /// a_T * b_{S\T} over subsets T of S.
  friend Jet3 operator*(const Jet3& a, const Jet3& b) {
    Jet3 r;
    r.c0 = a.c0 * b.c0;
    r.c1 = a.c0 * b.c1 + a.c1 * b.c0;
    r.c2 = a.c0 * b.c2 + a.c2 * b.c0;
    r.c3 = a.c0 * b.c3 + a.c3 * b.c0;
    r.c12 = a.c0 * b.c12 + a.c12 * b.c0 + a.c1 * b.c2 + a.c2 * b.c1;
    r.c13 = a.c0 * b.c13 + a.c13 * b.c0 + a.c1 * b.c3 + a.c3 * b.c1;
    r.c23 = a.c0 * b.c23 + a.c23 * b.c0 + a.c2 * b.c3 + a.c3 * b.c2;
    r.c123 = a.c0 * b.c123 + a.c123 * b.c0
           + a.c1 * b.c23 + a.c23 * b.c1
           + a.c2 * b.c13 + a.c13 * b.c2
           + a.c3 * b.c12 + a.c12 * b.c3;
    return r;
  }

  bool finite() const {
    return std::isfinite(c0) && std::isfinite(c1) && std::isfinite(c2) &&
           std::isfinite(c3) && std::isfinite(c12) && std::isfinite(c13) &&
           std::isfinite(c23) && std::isfinite(c123);
  }
};

/// Univariate chain rule: g applied to a jet, given g and its first three
/// derivatives at the jet value.  The nilpotent part h = u - u.c0 satisfies
/// h^4 = 0, so the composition terminates:
///
///     g(u) = g0 + g1 h + (g2/2) h^2 + (g3/6) h^3.
inline Jet3 jet_compose(const Jet3& u, double g0, double g1, double g2, double g3) {
  Jet3 h = u;
  h.c0 = 0.0;
  const Jet3 h2 = h * h;    // only pair and triple coefficients survive
  const Jet3 h3 = h2 * h;   // only c123 survives: 6 c1 c2 c3
  Jet3 r = h * g1;
  r += h2 * (0.5 * g2);
  r += h3 * (g3 / 6.0);
  r.c0 += g0;
  return r;
}

inline Jet3 recip(const Jet3& u) {
  if (u.c0 == 0.0) throw inadmissible_error("division by a zero jet value");
  const double i = 1.0 / u.c0;
  return jet_compose(u, i, -i * i, 2.0 * i * i * i, -6.0 * i * i * i * i);
}

inline Jet3 operator/(const Jet3& a, const Jet3& b) { return a * recip(b); }
inline Jet3 operator/(double a, const Jet3& b) { return Jet3::constant(a) * recip(b); }
inline Jet3 operator+(Jet3 a, double s) { a.c0 += s; return a; }
inline Jet3 operator+(double s, Jet3 a) { a.c0 += s; return a; }
inline Jet3 operator-(Jet3 a, double s) { a.c0 -= s; return a; }
inline Jet3 operator-(double s, const Jet3& a) { return Jet3::constant(s) - a; }

inline Jet3 sqrt(const Jet3& u) {
  if (!(u.c0 > 0.0))
    throw inadmissible_error("sqrt of a non-positive jet value (field undefined here)");
  const double r = std::sqrt(u.c0);
  const double i = 1.0 / u.c0;
  return jet_compose(u, r, 0.5 * r * i, -0.25 * r * i * i, 0.375 * r * i * i * i);
}

/// Real power with constant exponent.  Integer exponents of modest size go
/// through repeated multiplication and accept any base; fractional
/// exponents require a positive base.
inline Jet3 pow(const Jet3& u, double p) {
  const double rp = std::round(p);
  if (rp == p && std::abs(p) <= 16.0) {
    int e = static_cast<int>(rp);
    if (e == 0) return Jet3::constant(1.0);
    const bool neg = e < 0;
    e = neg ? -e : e;
    Jet3 acc = Jet3::constant(1.0);
    Jet3 base = u;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return neg ? recip(acc) : acc;
  }
  if (!(u.c0 > 0.0))
    throw inadmissible_error("fractional power of a non-positive jet value");
  const double g0 = std::pow(u.c0, p);
  const double g1 = p * std::pow(u.c0, p - 1.0);
  const double g2 = p * (p - 1.0) * std::pow(u.c0, p - 2.0);
  const double g3 = p * (p - 1.0) * (p - 2.0) * std::pow(u.c0, p - 3.0);
  return jet_compose(u, g0, g1, g2, g3);
}

/// A differentiable scalar field of an n-vector, expressed in jet arithmetic.
using ScalarField = std::function<Jet3(std::span<const Jet3>)>;

/// Value and mixed partials of t |-> field(y + t1 d1 + t2 d2 + t3 d3) at 0.
inline Jet3 jet_eval(const ScalarField& field, std::span<const double> y,
                     std::span<const double> d1, std::span<const double> d2,
                     std::span<const double> d3) {
  const std::size_t n = y.size();
  if (d1.size() != n || d2.size() != n || d3.size() != n)
    throw validation_error("jet_eval: direction size mismatch");
  std::vector<Jet3> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Jet3::seeded(y[i], d1[i], d2[i], d3[i]);
  return field(std::span<const Jet3>(x));
}

/// Third partial d^3 field / dy_i dy_j dy_k via basis-seeded jets.
inline double jet_third(const ScalarField& field, std::span<const double> y,
                        int i, int j, int k) {
  std::vector<double> d1(y.size(), 0.0), d2(y.size(), 0.0), d3(y.size(), 0.0);
  d1[static_cast<std::size_t>(i)] = 1.0;
  d2[static_cast<std::size_t>(j)] = 1.0;
  d3[static_cast<std::size_t>(k)] = 1.0;
  return jet_eval(field, y, d1, d2, d3).c123;
}

/// Plain value of the field at y.
inline double field_value(const ScalarField& field, std::span<const double> y) {
  std::vector<Jet3> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = Jet3::constant(y[i]);
  return field(std::span<const Jet3>(x)).c0;
}

}  // namespace finsler
