#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gha/errors.hpp"
#include "gha/exprparse.hpp"
#include "gha/matrix.hpp"
#include "gha/radical.hpp"
#include "gha/recurrence.hpp"
#include "gha/scalar.hpp"

namespace gha {

enum class Arithmetic { Exact, Float64 };

std::string_view to_string(Arithmetic mode);

/// One of the structure functions f_1 ... f_k: either a*x + b given directly,
/// or a parsed expression (which is also recognized as affine when it is).
class FunctionSpec {
 public:
  static FunctionSpec affine(Rational slope, Rational intercept);
  static FunctionSpec linear(Rational lambda) { return affine(std::move(lambda), Rational(0)); }
  static FunctionSpec expression(expr::NodePtr ast);
  static FunctionSpec parse(std::string_view text) { return expression(expr::parse(text)); }

  const std::optional<expr::Affine>& affine_form() const noexcept { return affine_; }
  bool is_affine() const noexcept { return affine_.has_value(); }
  // f(x) = lambda x with lambda != 0
  bool is_linear() const noexcept { return affine_ && affine_->intercept == 0 && affine_->slope != 0; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  std::string to_string() const;

 private:
  std::optional<expr::Affine> affine_;
  expr::NodePtr ast_;
};

/// Full algebra data: f_1..f_k, vacuum eigenvalues alpha_0^(1..k) and the
/// arithmetic used for the ladder.
struct GHASpec {
  std::vector<FunctionSpec> functions;
  std::vector<Rational> vacuum;
  Arithmetic arithmetic = Arithmetic::Exact;

  std::size_t order() const noexcept { return functions.size(); }

  // Throws OrderMismatch / InvalidArgument / ExactModeUnavailable.
  void validate() const;
  bool exact_available() const;
  // lambdas when every f_i is linear
  std::optional<CoefficientVector> linear_coefficients() const;

  // f_i(x) = lambda_i x for the given coefficients.
  static GHASpec linear(const CoefficientVector& coeffs, std::vector<Rational> vacuum,
                        Arithmetic mode = Arithmetic::Exact);
};

template <class T>
struct SpectrumRow {
  std::vector<T> alphas;  // alpha_n^(1) ... alpha_n^(k)
  T norm_sq;
  std::optional<double> norm;  // absent when norm_sq < 0

  friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

template <class T>
struct SpectrumTable {
  std::vector<SpectrumRow<T>> rows;
  bool physical_energy = true;  // all alpha_n^(1) >= 0
  bool unitary = true;          // all N_n^2 >= 0
  bool nondecreasing = true;    // alpha_{n+1}^(1) >= alpha_n^(1)

  std::size_t order() const { return rows.empty() ? 0 : rows.front().alphas.size(); }
  const T& energy(std::size_t n) const { return rows.at(n).alphas.front(); }

  friend bool operator==(const SpectrumTable&, const SpectrumTable&) = default;
};

using ExactSpectrum = SpectrumTable<Rational>;
using FloatSpectrum = SpectrumTable<double>;
using AnySpectrum = std::variant<ExactSpectrum, FloatSpectrum>;

ExactSpectrum spectrum_exact(const GHASpec& spec, std::size_t n_max);
FloatSpectrum spectrum_float(const GHASpec& spec, std::size_t n_max);
// Dispatches on spec.arithmetic.
AnySpectrum spectrum(const GHASpec& spec, std::size_t n_max);

struct PhysicalityReport {
  std::optional<std::size_t> negative_energy;   // first n with alpha_n^(1) < 0
  std::optional<std::size_t> negative_norm_sq;  // first n with N_n^2 < 0
  std::optional<std::size_t> decrease;          // first n with alpha_n^(1) < alpha_{n-1}^(1)

  bool physical_energy() const noexcept { return !negative_energy; }
  bool unitary() const noexcept { return !negative_norm_sq; }
  bool nondecreasing() const noexcept { return !decrease; }
};

template <class T>
PhysicalityReport physicality_report(const SpectrumTable<T>& table) {
  PhysicalityReport r;
  for (std::size_t n = 0; n < table.rows.size(); ++n) {
    const auto& row = table.rows[n];
    if (!r.negative_energy && row.alphas.front() < 0) r.negative_energy = n;
    if (!r.negative_norm_sq && row.norm_sq < 0) r.negative_norm_sq = n;
    if (!r.decrease && n + 1 < table.rows.size() && table.rows[n + 1].alphas.front() < row.alphas.front())
      r.decrease = n + 1;
  }
  return r;
}

/// Fock-space operators restricted to |0>, ..., |dim-1>.
template <class T>
struct TruncatedOps {
  std::size_t dim = 0;
  Matrix<T> H;
  std::vector<Matrix<T>> J;  // J[0] is J_2, ..., J[k-2] is J_k
  Matrix<T> a_dag;           // a_dag(n+1, n) = N_n
  Matrix<T> a;

  /// kappa(n, i) = N_{n-1} N_{n-2} ... N_{n-i+1}; empty product for i = 1.
  T kappa(std::size_t n, std::size_t i) const {
    if (i == 0 || n + 1 < i || n >= dim) throw InvalidArgument("kappa index out of range");
    T prod(1);
    for (std::size_t m = n + 1 - i; m + 1 <= n; ++m) prod = prod * a_dag(m + 1, m);
    return prod;
  }
};

using ExactOps = TruncatedOps<RadicalSum>;
using FloatOps = TruncatedOps<double>;

// Throws NonUnitaryRepresentation(n) for the first n < dim with N_n^2 < 0.
ExactOps truncated_operators_exact(const GHASpec& spec, std::size_t dim);
FloatOps truncated_operators_float(const GHASpec& spec, std::size_t dim);

struct RelationResidual {
  int family;  // 1: H a+ ; 2: J_i (a+)^(i-1) ; 3: [a, a+] ; 4: [H, J_i] ; 5: [J_i, J_j]
  std::string relation;
  double max_residual = 0.0;
  bool exact = false;
  bool exactly_zero = false;
  bool pass = false;
};

struct ResidualReport {
  std::vector<RelationResidual> relations;
  bool all_pass() const;
};

/// Max-norm residual of every defining relation on the index region that
/// truncation leaves intact. Throws TruncationTooSmall when dim < k.
ResidualReport verify_relations(const ExactOps& ops, const GHASpec& spec, double tol);
ResidualReport verify_relations(const FloatOps& ops, const GHASpec& spec, double tol);

}  // namespace gha
