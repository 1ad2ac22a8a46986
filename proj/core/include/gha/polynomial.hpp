#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gha/matrix.hpp"

namespace gha {

// Univariate polynomial; coefficients stored lowest degree first.
// The zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<T> ascending) : coeffs_(ascending) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial({c}); }
  // x - c
  static Polynomial linear_root(const T& c) { return Polynomial({-c, T(1)}); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == T(1); }

  // Coefficient of x^i (zero beyond the degree).
  T coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  template <class U>
  Polynomial<U> cast() const {
    std::vector<U> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(static_cast<U>(c));
    return Polynomial<U>(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

namespace detail {

template <class T>
Polynomial<T> cofactor_determinant(const std::vector<std::vector<Polynomial<T>>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial<T>::constant(T(1));
  if (n == 1) return m[0][0];
  Polynomial<T> det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial<T>>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial<T>> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial<T> term = m[0][col] * cofactor_determinant(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace detail

// det(xI - M) by Laplace expansion along the first row. Exact over exact T;
// cost grows factorially, intended for k <= 8 or so.
template <class T>
Polynomial<T> characteristic_polynomial(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Polynomial<T>>> entries(n, std::vector<Polynomial<T>>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Polynomial<T> e = Polynomial<T>::constant(-m(r, c));
      if (r == c) e += Polynomial<T>({T(0), T(1)});
      entries[r][c] = std::move(e);
    }
  return detail::cofactor_determinant(entries);
}

}  // namespace gha
