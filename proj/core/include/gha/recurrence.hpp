#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gha/matrix.hpp"
#include "gha/scalar.hpp"

namespace gha {

/// Coefficients (lambda_1, ..., lambda_k) of the k-step recurrence
///   a_{n+1} = lambda_1 a_n + lambda_2 a_{n-1} + ... + lambda_k a_{n-k+1}.
/// Every coefficient must be nonzero; the order k is at least 1.
class CoefficientVector {
 public:
  explicit CoefficientVector(std::vector<Rational> lambdas);

  std::size_t order() const noexcept { return lambdas_.size(); }
  // 1-based, matching lambda_1 ... lambda_k.
  const Rational& lambda(std::size_t i) const { return lambdas_.at(i - 1); }
  std::span<const Rational> values() const noexcept { return lambdas_; }

  // All lambda_i == 1.
  bool is_unit() const;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  std::vector<Rational> lambdas_;
};

/// Vacuum data plus the derived state vector (a_{-(k-1)}, ..., a_{-1}, a_0)
/// with a_{-m} = higher[m-1] / lambda_{m+1}.
struct SeedState {
  Rational alpha0;
  std::vector<Rational> higher;
  std::vector<Rational> extended;
};

SeedState extend_seeds(const CoefficientVector& coeffs, const Rational& alpha0,
                       std::vector<Rational> higher);

// alpha0 = 1, all higher vacuum values 0.
SeedState unit_seeds(const CoefficientVector& coeffs);

struct ExactSequence {
  std::vector<Rational> values;  // a_0 ... a_{n_max}
  CoefficientVector coefficients;
  SeedState seeds;
};

ExactSequence iterate_sequence(const CoefficientVector& coeffs, const SeedState& seeds,
                               std::size_t n_max);

/// T_k(lambda): ones on the superdiagonal, last row (lambda_k, ..., lambda_1).
Matrix<Rational> companion_matrix(const CoefficientVector& coeffs);

/// T_k(lambda)^n applied to seeds.extended, i.e. (a_{n-k+1}, ..., a_n).
std::vector<Rational> matrix_power_sequence(const CoefficientVector& coeffs, const SeedState& seeds,
                                            unsigned long long n);

/// k-generalized Fibonacci number
///   F_m^(k) = sum over a_1 + 2a_2 + ... + k a_k = m-k+1 of (a_1+...+a_k)! / (a_1! ... a_k!).
/// Throws DomainError when m - k + 1 < 0 or k < 1.
BigInt miles_number(int k, long long m);

/// E_n = F_{n+k-1}^(k), the n-th level for unit coefficients and vacuum (1, 0, ..., 0).
BigInt energy_from_miles(int k, long long n);

}  // namespace gha
