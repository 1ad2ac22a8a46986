#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "gha/matrix.hpp"
#include "gha/scalar.hpp"

namespace gha {

namespace detail {
inline double pivot_score(const Rational& v) { return v == 0 ? 0.0 : 1.0; }
inline double pivot_score(double v) { return std::abs(v); }
inline double pivot_score(const std::complex<double>& v) { return std::abs(v); }
}  // namespace detail

/// Gaussian elimination with partial pivoting (first nonzero pivot for exact
/// scalars). Returns nullopt when the system is singular.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  if (!a.square() || b.size() != n) return std::nullopt;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_score = detail::pivot_score(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double s = detail::pivot_score(a(r, col));
      if (s > best_score) {
        best = r;
        best_score = s;
      }
    }
    if (best_score == 0.0) return std::nullopt;
    if (best != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(best, c));
      std::swap(b[col], b[best]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == T(0)) continue;
      const T factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[r] -= factor * b[col];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * x[c];
    x[i] = acc / a(i, i);
  }
  return x;
}

}  // namespace gha
