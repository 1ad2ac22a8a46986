#include "gha/recurrence.hpp"

#include <algorithm>
#include <string>

#include "gha/errors.hpp"

namespace gha {

CoefficientVector::CoefficientVector(std::vector<Rational> lambdas) : lambdas_(std::move(lambdas)) {
  if (lambdas_.empty()) throw InvalidArgument("coefficient vector must have order k >= 1");
  for (std::size_t i = 0; i < lambdas_.size(); ++i)
    if (lambdas_[i] == 0)
      throw InvalidArgument("coefficient lambda_" + std::to_string(i + 1) + " must be nonzero");
}

bool CoefficientVector::is_unit() const {
  return std::all_of(lambdas_.begin(), lambdas_.end(), [](const Rational& l) { return l == 1; });
}

SeedState extend_seeds(const CoefficientVector& coeffs, const Rational& alpha0,
                       std::vector<Rational> higher) {
  const std::size_t k = coeffs.order();
  if (higher.size() != k - 1)
    throw OrderMismatch("expected " + std::to_string(k - 1) + " higher vacuum values for k=" +
                        std::to_string(k) + ", got " + std::to_string(higher.size()));
  SeedState s{alpha0, std::move(higher), std::vector<Rational>(k)};
  // extended[k-1-m] holds a_{-m}
  s.extended[k - 1] = alpha0;
  for (std::size_t m = 1; m < k; ++m) s.extended[k - 1 - m] = s.higher[m - 1] / coeffs.lambda(m + 1);
  return s;
}

SeedState unit_seeds(const CoefficientVector& coeffs) {
  return extend_seeds(coeffs, Rational(1), std::vector<Rational>(coeffs.order() - 1, Rational(0)));
}

ExactSequence iterate_sequence(const CoefficientVector& coeffs, const SeedState& seeds,
                               std::size_t n_max) {
  const std::size_t k = coeffs.order();
  if (seeds.extended.size() != k) throw OrderMismatch("seed state order does not match coefficients");
  // window holds a_{-(k-1)} ... a_{n_max}
  std::vector<Rational> window(seeds.extended.begin(), seeds.extended.end());
  window.reserve(k + n_max);
  for (std::size_t n = 0; n < n_max; ++n) {
    Rational next = 0;
    const std::size_t top = window.size() - 1;
    for (std::size_t i = 1; i <= k; ++i) next += coeffs.lambda(i) * window[top - (i - 1)];
    window.push_back(std::move(next));
  }
  ExactSequence out{{window.begin() + static_cast<std::ptrdiff_t>(k - 1), window.end()}, coeffs,
                    seeds};
  return out;
}

Matrix<Rational> companion_matrix(const CoefficientVector& coeffs) {
  const std::size_t k = coeffs.order();
  Matrix<Rational> t(k, k);
  for (std::size_t r = 0; r + 1 < k; ++r) t(r, r + 1) = 1;
  for (std::size_t c = 0; c < k; ++c) t(k - 1, c) = coeffs.lambda(k - c);
  return t;
}

std::vector<Rational> matrix_power_sequence(const CoefficientVector& coeffs, const SeedState& seeds,
                                            unsigned long long n) {
  if (seeds.extended.size() != coeffs.order())
    throw OrderMismatch("seed state order does not match coefficients");
  const Matrix<Rational> p = power(companion_matrix(coeffs), n);
  return p * std::span<const Rational>(seeds.extended);
}

namespace {

// Depth-first over a_k, a_{k-1}, ..., a_2 with a_1 forced by the remaining
// weight. `multinomial` is the running (a_j + ... + a_k)! / (a_j! ... a_k!).
void miles_dfs(int j, long long remaining, long long parts, const BigInt& multinomial, BigInt& sum) {
  if (j == 1) {
    // a_1 = remaining; multiply by C(parts + a_1, a_1)
    BigInt m = multinomial;
    for (long long t = 1; t <= remaining; ++t) {
      m *= parts + t;
      m /= t;
    }
    sum += m;
    return;
  }
  BigInt m = multinomial;
  for (long long a = 0; a * j <= remaining; ++a) {
    if (a > 0) {
      m *= parts + a;
      m /= a;
    }
    miles_dfs(j - 1, remaining - a * j, parts + a, m, sum);
  }
}

}  // namespace

BigInt miles_number(int k, long long m) {
  if (k < 1) throw DomainError("Miles number requires k >= 1, got k=" + std::to_string(k));
  const long long weight = m - k + 1;
  if (weight < 0)
    throw DomainError("Miles number F_m^(k) requires m >= k-1 (k=" + std::to_string(k) +
                      ", m=" + std::to_string(m) + ")");
  BigInt sum = 0;
  miles_dfs(k, weight, 0, BigInt(1), sum);
  return sum;
}

BigInt energy_from_miles(int k, long long n) {
  if (n < 0) throw DomainError("level index must be nonnegative");
  return miles_number(k, n + k - 1);
}

}  // namespace gha
