#pragma once

/**
 * @file linalg.hpp
 * @brief Small dense linear algebra for fiber-tensor work (dims <= ~8).
 *
 * Gauss-Jordan inversion with partial pivoting and cyclic Jacobi
 * eigenvalues are plenty at these sizes; no external solver is pulled in.
 */

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "finsler/errors.hpp"

namespace finsler {

using Vec = std::vector<double>;

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Matrix mat_mul(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw validation_error("mat_mul: shape mismatch");
  Matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const double v = x(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

inline Vec mat_vec(const Matrix& m, std::span<const double> v) {
  if (m.cols != static_cast<int>(v.size())) throw validation_error("mat_vec: shape mismatch");
  Vec r(static_cast<std::size_t>(m.rows), 0.0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r[static_cast<std::size_t>(i)] += m(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

inline double max_abs(const Matrix& m) {
  double r = 0.0;
  for (double v : m.a) r = std::max(r, std::abs(v));
  return r;
}

inline double max_abs_diff(const Matrix& x, const Matrix& y) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) r = std::max(r, std::abs(x.a[i] - y.a[i]));
  return r;
}

inline bool is_symmetric(const Matrix& m, double tol = 1e-12) {
  if (m.rows != m.cols) return false;
  const double scale = std::max(1.0, max_abs(m));
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.cols; ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol * scale) return false;
  return true;
}

/// Gauss-Jordan with partial pivoting.  Throws on (near-)singular input.
inline Matrix inverse(const Matrix& m) {
  if (m.rows != m.cols) throw validation_error("inverse: matrix not square");
  const int n = m.rows;
  Matrix w = m;
  Matrix inv = Matrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(w(r, col)) > std::abs(w(piv, col))) piv = r;
    if (std::abs(w(piv, col)) < 1e-300)
      throw inadmissible_error("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.a[static_cast<std::size_t>(piv) * n + j], w.a[static_cast<std::size_t>(col) * n + j]);
        std::swap(inv.a[static_cast<std::size_t>(piv) * n + j], inv.a[static_cast<std::size_t>(col) * n + j]);
      }
    const double d = 1.0 / w(col, col);
    for (int j = 0; j < n; ++j) {
      w(col, j) *= d;
      inv(col, j) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = w(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        w(r, j) -= f * w(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, ascending.
inline Vec sym_eigenvalues(const Matrix& m) {
  if (m.rows != m.cols) throw validation_error("sym_eigenvalues: matrix not square");
  const int n = m.rows;
  Matrix w = m;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += w(i, j) * w(i, j);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(w(p, q)) < 1e-300) continue;
        const double theta = 0.5 * (w(q, q) - w(p, p)) / w(p, q);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double wkp = w(k, p), wkq = w(k, q);
          w(k, p) = c * wkp - s * wkq;
          w(k, q) = s * wkp + c * wkq;
        }
        for (int k = 0; k < n; ++k) {
          const double wpk = w(p, k), wqk = w(q, k);
          w(p, k) = c * wpk - s * wqk;
          w(q, k) = s * wpk + c * wqk;
        }
      }
  }
  Vec ev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = w(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline bool is_spd(const Matrix& m, double tol = 0.0) {
  if (!is_symmetric(m, 1e-10)) return false;
  const Vec ev = sym_eigenvalues(m);
  return !ev.empty() && ev.front() > tol;
}

}  // namespace finsler
