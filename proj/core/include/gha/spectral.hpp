#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "gha/matrix.hpp"
#include "gha/polynomial.hpp"
#include "gha/recurrence.hpp"
#include "gha/scalar.hpp"

namespace gha {

/// x^k - lambda_1 x^{k-1} - ... - lambda_k, the characteristic polynomial of T_k(lambda).
Polynomial<Rational> char_poly(const CoefficientVector& coeffs);

/// Matrix of the mixed-state recursion on (alpha^(1), ..., alpha^(k)):
/// first row (lambda_1, 1, ..., 1), second row (lambda_2, 0, ..., 0) and
/// lambda_i / lambda_{i-1} at (i-1, i-2) for i >= 3 (0-based).
Matrix<Rational> mixed_state_matrix(const CoefficientVector& coeffs);

inline constexpr double kDefaultRootTol = 1e-13;
inline constexpr int kDefaultMaxIter = 500;
// Roots closer than this multiple of tol are treated as repeated.
inline constexpr double kRepeatedRootFactor = 1e3;

struct RootSet {
  std::vector<std::complex<double>> roots;
  std::size_t dominant = 0;
  double condition = 0.0;  // minimal pairwise distance (infinity for one root)
  bool near_repeated = false;
  int iterations = 0;

  const std::complex<double>& dominant_root() const { return roots.at(dominant); }
};

/// Durand-Kerner simultaneous iteration on a monic polynomial.
///
/// Initial guesses are roots of unity on a circle of radius 1 + max|a_i|,
/// rotated by a fixed irrational angle so that no guess lands on the real
/// axis. Iteration stops once every update is below tol * max(1, |z|), or
/// once every residual |p(z)| sits at Horner rounding level; the second exit
/// happens for clustered roots and sets `near_repeated`.
/// The dominant root has maximal modulus; ties go to the larger real part,
/// then to the positive imaginary part.
///
/// Throws NonConvergence (carrying the last iterate) after max_iter sweeps.
/// Roots closer than kRepeatedRootFactor * tol set `near_repeated`, which
/// makes binet_form refuse the set.
RootSet find_roots(const Polynomial<double>& monic, double tol = kDefaultRootTol,
                   int max_iter = kDefaultMaxIter);
RootSet find_roots(const Polynomial<Rational>& monic, double tol = kDefaultRootTol,
                   int max_iter = kDefaultMaxIter);

struct BinetForm {
  std::vector<std::complex<double>> coefficients;  // alpha_n = sum c_i root_i^n
};

/// Solves the Vandermonde system matching alpha_{-(k-1)}, ..., alpha_0.
/// Throws RepeatedRoots when roots.near_repeated.
BinetForm binet_form(const CoefficientVector& coeffs, const SeedState& seeds, const RootSet& roots);

struct BinetValue {
  double value;              // real part
  double imaginary_residue;  // |imaginary part|
};

/// Throws ImaginaryResidueTooLarge when |Im| > 1e-8 * sum |c_i root_i^n|.
BinetValue binet_eval(const BinetForm& form, const RootSet& roots, long long n);

struct RatioLimitReport {
  std::size_t n_max = 0;
  double ratio = 0.0;  // alpha_{n_max+1} / alpha_{n_max}
  double dominant = 0.0;
  double subdominant_modulus = 0.0;
  double deviation = 0.0;
  double tol = 0.0;
  // (subdominant / dominant)^n_max < tol / 10, so the bound is expected to hold
  bool asymptotic = false;
  bool within_tol = false;
  bool passed = false;  // !asymptotic || within_tol
};

/// Compares alpha_{n+1}/alpha_n (from exact values) to the dominant root at n = n_max.
/// Throws InvalidArgument when the dominant root is not real, positive and
/// strictly separated, DominantModeAbsent when its Binet weight is <= tol.
RatioLimitReport ratio_limit_check(const CoefficientVector& coeffs, const SeedState& seeds,
                                   std::size_t n_max, double tol);

struct StochasticReport {
  bool nonnegative = false;
  Rational coefficient_sum;
  bool stochastic = false;
  std::optional<std::vector<Rational>> stationary;  // pi T = pi, sum pi = 1
  std::optional<double> dominant_root;
  bool dominant_is_one = false;  // |dominant - 1| <= 1e-12
};

StochasticReport stochastic_analysis(const CoefficientVector& coeffs);

}  // namespace gha
