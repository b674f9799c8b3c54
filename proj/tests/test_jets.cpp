#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <vector>

#include "finsler/finite_diff.hpp"
#include "finsler/jets.hpp"
#include "finsler/sampling.hpp"

using namespace finsler;

namespace {

// ---------------------------------------------------------------------------
// Test-only oracle: exact multivariate polynomials with symbolic partials.
// Kept independent of the jet arithmetic it checks.
// ---------------------------------------------------------------------------

struct Poly {
  int dim = 0;
  std::map<std::vector<int>, double> terms;  // exponent tuple -> coefficient

  static Poly constant(int dim, double c) {
    Poly p;
    p.dim = dim;
    if (c != 0.0) p.terms[std::vector<int>(static_cast<std::size_t>(dim), 0)] = c;
    return p;
  }
  static Poly var(int dim, int i) {
    Poly p;
    p.dim = dim;
    std::vector<int> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.terms[e] = 1.0;
    return p;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [e, c] : o.terms) r.terms[e] += c;
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r;
    r.dim = dim;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<int> e = e1;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
        r.terms[e] += c1 * c2;
      }
    return r;
  }
  Poly scaled(double s) const {
    Poly r = *this;
    for (auto& [e, c] : r.terms) c *= s;
    return r;
  }

  Poly partial(int i) const {
    Poly r;
    r.dim = dim;
    for (const auto& [e, c] : terms) {
      if (e[static_cast<std::size_t>(i)] == 0) continue;
      std::vector<int> d = e;
      d[static_cast<std::size_t>(i)] -= 1;
      r.terms[d] += c * e[static_cast<std::size_t>(i)];
    }
    return r;
  }

  /// Directional derivative along d (still a polynomial).
  Poly dir_derivative(const Vec& d) const {
    Poly r;
    r.dim = dim;
    for (int i = 0; i < dim; ++i) {
      if (d[static_cast<std::size_t>(i)] == 0.0) continue;
      r = r + partial(i).scaled(d[static_cast<std::size_t>(i)]);
    }
    return r;
  }

  double eval(const Vec& y) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms) {
      double t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t *= y[i];
      acc += t;
    }
    return acc;
  }

  ScalarField field() const {
    Poly copy = *this;
    return [copy](std::span<const Jet3> y) {
      Jet3 acc;
      for (const auto& [e, c] : copy.terms) {
        Jet3 t = Jet3::constant(c);
        for (std::size_t i = 0; i < e.size(); ++i)
          for (int k = 0; k < e[i]; ++k) t = t * y[i];
        acc += t;
      }
      return acc;
    };
  }
};

Poly random_poly(Rng& rng, int dim, int max_deg) {
  Poly p = Poly::constant(dim, rng.uniform(-1, 1));
  for (int t = 0; t < 8; ++t) {
    Poly mono = Poly::constant(dim, rng.uniform(-2, 2));
    const int deg = static_cast<int>(rng.uniform(0, max_deg + 0.999));
    for (int d = 0; d < deg; ++d)
      mono = mono * Poly::var(dim, static_cast<int>(rng.uniform(0, dim - 1e-9)));
    p = p + mono;
  }
  return p;
}

/// All eight jet coefficients from symbolic differentiation.
Jet3 poly_jet_oracle(const Poly& p, const Vec& y, const Vec& d1, const Vec& d2, const Vec& d3) {
  const Poly p1 = p.dir_derivative(d1);
  const Poly p2 = p.dir_derivative(d2);
  const Poly p3 = p.dir_derivative(d3);
  Jet3 j;
  j.c0 = p.eval(y);
  j.c1 = p1.eval(y);
  j.c2 = p2.eval(y);
  j.c3 = p3.eval(y);
  j.c12 = p1.dir_derivative(d2).eval(y);
  j.c13 = p1.dir_derivative(d3).eval(y);
  j.c23 = p2.dir_derivative(d3).eval(y);
  j.c123 = p1.dir_derivative(d2).dir_derivative(d3).eval(y);
  return j;
}

void expect_jets_equal(const Jet3& a, const Jet3& b, double tol) {
  CHECK(std::abs(a.c0 - b.c0) <= tol);
  CHECK(std::abs(a.c1 - b.c1) <= tol);
  CHECK(std::abs(a.c2 - b.c2) <= tol);
  CHECK(std::abs(a.c3 - b.c3) <= tol);
  CHECK(std::abs(a.c12 - b.c12) <= tol);
  CHECK(std::abs(a.c13 - b.c13) <= tol);
  CHECK(std::abs(a.c23 - b.c23) <= tol);
  CHECK(std::abs(a.c123 - b.c123) <= tol);
}

ScalarField randers_f2_field() {
  // alpha Euclidean on R^2, beta = 0.5 dy1
  return [](std::span<const Jet3> y) {
    const Jet3 f = sqrt(y[0] * y[0] + y[1] * y[1]) + y[0] * 0.5;
    return f * f;
  };
}

}  // namespace

TEST_CASE("jet coefficients of simple fields") {
  const ScalarField norm2 = [](std::span<const Jet3> y) { return y[0] * y[0] + y[1] * y[1]; };
  const Vec y{1.0, 0.0};
  const Vec e1{1.0, 0.0};

  const Jet3 j = jet_eval(norm2, y, e1, e1, e1);
  CHECK(j.c0 == 1.0);
  CHECK(j.c1 == 2.0);
  CHECK(j.c2 == 2.0);
  CHECK(j.c3 == 2.0);
  CHECK(j.c12 == 2.0);
  CHECK(j.c13 == 2.0);
  CHECK(j.c23 == 2.0);
  CHECK(j.c123 == 0.0);  // quadratic: third derivative vanishes

  const ScalarField cube = [](std::span<const Jet3> y_) { return y_[0] * y_[0] * y_[0]; };
  const Vec y1{2.0};
  const Vec d{1.0};
  CHECK(jet_eval(cube, y1, d, d, d).c123 == 6.0);
}

TEST_CASE("seeding the identity returns the direction components") {
  const ScalarField coord0 = [](std::span<const Jet3> y) { return y[0]; };
  const Vec y{3.0, -1.0};
  const Vec u{0.25, 4.0};
  const Vec zero{0.0, 0.0};
  const Jet3 j = jet_eval(coord0, y, u, zero, zero);
  CHECK(j.c0 == 3.0);
  CHECK(j.c1 == 0.25);
  CHECK(j.c2 == 0.0);
  CHECK(j.c12 == 0.0);
  CHECK(j.c123 == 0.0);
}

TEST_CASE("jet arithmetic is a ring homomorphism on polynomials") {
  Rng rng(2024);
  for (int trial = 0; trial < 24; ++trial) {
    const int dim = 2 + (trial % 2);
    const Poly p = random_poly(rng, dim, 3);
    const Poly q = random_poly(rng, dim, 3);
    Vec y(static_cast<std::size_t>(dim)), d1 = rng.unit_vector(dim), d2 = rng.unit_vector(dim),
        d3 = rng.unit_vector(dim);
    for (double& v : y) v = rng.uniform(-1.5, 1.5);

    const Jet3 jp = jet_eval(p.field(), y, d1, d2, d3);
    const Jet3 jq = jet_eval(q.field(), y, d1, d2, d3);

    // product: evaluate the product field, multiply the jets, and expand symbolically
    const Jet3 direct = jet_eval((p * q).field(), y, d1, d2, d3);
    const Jet3 leibniz = jp * jq;
    const Jet3 symbolic = poly_jet_oracle(p * q, y, d1, d2, d3);

    double scale = 1.0;
    for (double c : {symbolic.c0, symbolic.c1, symbolic.c12, symbolic.c123})
      scale = std::max(scale, std::abs(c));
    expect_jets_equal(direct, symbolic, 1e-11 * scale);
    expect_jets_equal(leibniz, symbolic, 1e-11 * scale);

    // linearity: jets of 2p - 3q
    const Jet3 lin = jet_eval((p.scaled(2.0) + q.scaled(-3.0)).field(), y, d1, d2, d3);
    Jet3 expected = jp * 2.0;
    expected -= jq * 3.0;
    expect_jets_equal(lin, expected, 1e-11 * scale);
  }
}

TEST_CASE("jet coefficients are symmetric under seed permutation") {
  Rng rng(7);
  const ScalarField f2 = randers_f2_field();
  for (int trial = 0; trial < 10; ++trial) {
    Vec y = rng.unit_vector(2);
    for (double& v : y) v *= rng.uniform(0.5, 2.0);
    const Vec a = rng.unit_vector(2), b = rng.unit_vector(2), c = rng.unit_vector(2);
    const Jet3 j1 = jet_eval(f2, y, a, b, c);
    const Jet3 j2 = jet_eval(f2, y, b, c, a);
    const double tol = 1e-12 * std::max(1.0, std::abs(j1.c123));
    CHECK(std::abs(j1.c12 - j2.c13) <= tol);  // (a,b) appears as slots (1,2) then (3,1)
    CHECK(std::abs(j1.c123 - j2.c123) <= tol);
    CHECK(std::abs(j1.c1 - j2.c3) <= tol);
  }
}

TEST_CASE("sqrt and power jets satisfy algebraic identities") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Vec y = rng.unit_vector(3);
    for (double& v : y) v *= rng.uniform(0.5, 2.0);
    const Vec d1 = rng.unit_vector(3), d2 = rng.unit_vector(3), d3 = rng.unit_vector(3);

    const ScalarField q = [](std::span<const Jet3> x) {
      return x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    };
    const ScalarField sq = [](std::span<const Jet3> x) {
      const Jet3 s = sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
      return s * s;
    };
    const ScalarField pw = [](std::span<const Jet3> x) {
      const Jet3 u = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
      return pow(u, 0.5) * pow(u, 0.5);
    };
    const Jet3 a = jet_eval(q, y, d1, d2, d3);
    expect_jets_equal(jet_eval(sq, y, d1, d2, d3), a, 1e-12 * std::max(1.0, std::abs(a.c0)));
    expect_jets_equal(jet_eval(pw, y, d1, d2, d3), a, 1e-12 * std::max(1.0, std::abs(a.c0)));

    // division: (q / q) == 1
    const ScalarField ratio = [](std::span<const Jet3> x) {
      const Jet3 u = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
      return u / u;
    };
    expect_jets_equal(jet_eval(ratio, y, d1, d2, d3), Jet3::constant(1.0), 1e-13);
  }
}

TEST_CASE("domain errors") {
  const Vec y{-1.0};
  const Vec d{1.0};
  const ScalarField bad_sqrt = [](std::span<const Jet3> x) { return sqrt(x[0]); };
  CHECK_THROWS_AS(jet_eval(bad_sqrt, y, d, d, d), inadmissible_error);

  const ScalarField bad_div = [](std::span<const Jet3> x) { return 1.0 / (x[0] + 1.0); };
  CHECK_THROWS_AS(jet_eval(bad_div, y, d, d, d), inadmissible_error);

  const ScalarField bad_pow = [](std::span<const Jet3> x) { return pow(x[0], 0.75); };
  CHECK_THROWS_AS(jet_eval(bad_pow, y, d, d, d), inadmissible_error);
}

// ---------------------------------------------------------------------------
// fd_third
// ---------------------------------------------------------------------------

TEST_CASE("fd_third on reference fields") {
  const ScalarField cube = [](std::span<const Jet3> x) { return x[0] * x[0] * x[0]; };
  const Vec y1{1.0};
  CHECK(std::abs(fd_third(cube, y1, 0, 0, 0, 1e-3) - 6.0) <= 1e-6);

  const ScalarField norm2 = [](std::span<const Jet3> x) { return x[0] * x[0] + x[1] * x[1]; };
  const Vec y2{1.0, 2.0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        CHECK(std::abs(fd_third(norm2, y2, i, j, k, 1e-3)) <= 1e-6);
}

TEST_CASE("fd_third flags non-finite evaluations") {
  const ScalarField partial_nan = [](std::span<const Jet3> x) {
    if (x[0].c0 < 0.0) return Jet3::constant(std::numeric_limits<double>::quiet_NaN());
    return x[0] * x[0];
  };
  const Vec y{5e-4};
  CHECK_THROWS_AS(fd_third(partial_nan, y, 0, 0, 0, 1e-3), inadmissible_error);
}

TEST_CASE("randers third derivative: jets vs finite differences vs closed value") {
  const ScalarField f2 = randers_f2_field();
  const Vec y{1.0, 1.0};
  const Vec e1{1.0, 0.0}, e2{0.0, 1.0};

  const Jet3 j = jet_eval(f2, y, e1, e1, e2);
  const double fd = fd_third_richardson(f2, y, 0, 0, 1);
  CHECK(std::abs(j.c123 - fd) <= 1e-5 * std::abs(j.c123));

  // d^3 F^2 / dy1 dy1 dy2 at (1,1) for F = |y| + y1/2 equals -3 sqrt(2) / 8
  const double expected = -3.0 * std::sqrt(2.0) / 8.0;
  CHECK(j.c123 == Catch::Approx(expected).epsilon(1e-13));
}

TEST_CASE("oracle agreement on random smooth fields") {
  Rng rng(31337);
  int performed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + (trial % 2);
    const bool poly_case = trial % 2 == 0;
    Vec y = rng.unit_vector(dim);
    for (double& v : y) v *= rng.uniform(0.7, 1.4);
    const int i = static_cast<int>(rng.uniform(0, dim - 1e-9));
    const int j = static_cast<int>(rng.uniform(0, dim - 1e-9));
    const int k = static_cast<int>(rng.uniform(0, dim - 1e-9));

    ScalarField field;
    double fd = 0.0;
    if (poly_case) {
      const Poly p = random_poly(rng, dim, 4);
      field = p.field();
      // degree <= 4: the composed central stencil is exact, so a wide step
      // kills the rounding noise
      fd = fd_third(field, y, i, j, k, 0.05);
    } else {
      const double w = rng.uniform(0.25, 1.0);
      field = [w](std::span<const Jet3> x) {
        Jet3 q;
        for (const Jet3& c : x) q += c * c;
        const Jet3 s = sqrt(q) + x[0] * w;
        return s * s + pow(q, 0.75);
      };
      fd = fd_third_richardson(field, y, i, j, k, 5e-3);
    }
    const double jet = jet_eval_entry(field, y, i, j, k);
    CHECK(std::abs(jet - fd) <= std::max(1e-5 * std::abs(jet), 1e-7));
    ++performed;
  }
  CHECK(performed == 100);
}
