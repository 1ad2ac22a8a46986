#include "gha/algebra.hpp"

#include <cmath>

#include "gha/errors.hpp"

namespace gha {

std::string_view to_string(Arithmetic mode) {
  return mode == Arithmetic::Exact ? "exact" : "float64";
}

FunctionSpec FunctionSpec::affine(Rational slope, Rational intercept) {
  FunctionSpec f;
  f.affine_ = expr::Affine{std::move(slope), std::move(intercept)};
  return f;
}

FunctionSpec FunctionSpec::expression(expr::NodePtr ast) {
  if (!ast) throw InvalidArgument("null expression");
  FunctionSpec f;
  f.affine_ = expr::as_affine(*ast);
  f.ast_ = std::move(ast);
  return f;
}

Rational FunctionSpec::operator()(const Rational& x) const {
  if (affine_) return affine_->slope * x + affine_->intercept;
  return expr::eval(*ast_, x);
}

double FunctionSpec::operator()(double x) const {
  if (ast_) return expr::eval(*ast_, x);
  return to_double(affine_->slope) * x + to_double(affine_->intercept);
}

std::string FunctionSpec::to_string() const {
  if (ast_) return expr::to_string(*ast_);
  std::string s = gha::to_string(affine_->slope) + "*x";
  if (affine_->intercept != 0) s += " + " + gha::to_string(affine_->intercept);
  return s;
}

void GHASpec::validate() const {
  if (functions.empty()) throw InvalidArgument("algebra order k must be >= 1");
  if (vacuum.size() != functions.size())
    throw OrderMismatch("vacuum: expected " + std::to_string(functions.size()) + " values (k=" +
                        std::to_string(functions.size()) + "), got " + std::to_string(vacuum.size()));
  if (arithmetic == Arithmetic::Exact && !exact_available())
    throw ExactModeUnavailable("exact arithmetic requires every f_i to be affine");
}

bool GHASpec::exact_available() const {
  for (const auto& f : functions)
    if (!f.is_affine()) return false;
  return true;
}

std::optional<CoefficientVector> GHASpec::linear_coefficients() const {
  std::vector<Rational> lambdas;
  for (const auto& f : functions) {
    if (!f.is_linear()) return std::nullopt;
    lambdas.push_back(f.affine_form()->slope);
  }
  return CoefficientVector(std::move(lambdas));
}

GHASpec GHASpec::linear(const CoefficientVector& coeffs, std::vector<Rational> vacuum, Arithmetic mode) {
  GHASpec spec;
  for (const auto& l : coeffs.values()) spec.functions.push_back(FunctionSpec::linear(l));
  spec.vacuum = std::move(vacuum);
  spec.arithmetic = mode;
  return spec;
}

namespace {

template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, double>)
    return to_double(r);
  else
    return r;
}

template <class T>
SpectrumTable<T> build_spectrum(const GHASpec& spec, std::size_t n_max) {
  const std::size_t k = spec.order();
  const auto linear = spec.linear_coefficients();

  // alpha[i][n] is alpha_n^(i+1)
  std::vector<std::vector<T>> alpha(k, std::vector<T>(n_max + 1));
  for (std::size_t i = 0; i < k; ++i) alpha[i][0] = from_rational<T>(spec.vacuum[i]);

  for (std::size_t n = 0; n < n_max; ++n) {
    T next = spec.functions[0](alpha[0][n]);
    for (std::size_t i = 1; i < k; ++i) next += alpha[i][n];
    alpha[0][n + 1] = next;
    // alpha_{n+1}^(i) = f_i(alpha_{n-i+2}^(1)), i = ladder + 1
    for (std::size_t ladder = 1; ladder < k; ++ladder) {
      const std::size_t i = ladder + 1;
      if (n + 2 >= i) {
        alpha[ladder][n + 1] = spec.functions[ladder](alpha[0][n + 2 - i]);
      } else if (linear) {
        // alpha_{-m}^(1) = alpha_0^(m+1) / lambda_{m+1}
        const std::size_t m = i - 2 - n;
        const Rational seed = spec.vacuum[m] / linear->lambda(m + 1);
        alpha[ladder][n + 1] = from_rational<T>(linear->lambda(i) * seed);
      } else {
        alpha[ladder][n + 1] = alpha[ladder][0];
      }
    }
  }

  SpectrumTable<T> table;
  table.rows.resize(n_max + 1);
  T norm_sq(0);
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto& row = table.rows[n];
    row.alphas.resize(k);
    for (std::size_t i = 0; i < k; ++i) row.alphas[i] = alpha[i][n];
    T delta = spec.functions[0](alpha[0][n]) - alpha[0][n];
    for (std::size_t i = 1; i < k; ++i) delta += alpha[i][n];
    norm_sq = n == 0 ? delta : T(norm_sq + delta);
    row.norm_sq = norm_sq;
    if (norm_sq >= 0) {
      if constexpr (std::is_same_v<T, double>)
        row.norm = std::sqrt(norm_sq);
      else
        row.norm = std::sqrt(to_double(norm_sq));
    }
  }
  const auto report = physicality_report(table);
  table.physical_energy = report.physical_energy();
  table.unitary = report.unitary();
  table.nondecreasing = report.nondecreasing();
  return table;
}

}  // namespace

ExactSpectrum spectrum_exact(const GHASpec& spec, std::size_t n_max) {
  GHASpec exact = spec;
  exact.arithmetic = Arithmetic::Exact;
  exact.validate();
  return build_spectrum<Rational>(exact, n_max);
}

FloatSpectrum spectrum_float(const GHASpec& spec, std::size_t n_max) {
  GHASpec fl = spec;
  fl.arithmetic = Arithmetic::Float64;
  fl.validate();
  return build_spectrum<double>(fl, n_max);
}

AnySpectrum spectrum(const GHASpec& spec, std::size_t n_max) {
  if (spec.arithmetic == Arithmetic::Exact) return spectrum_exact(spec, n_max);
  return spectrum_float(spec, n_max);
}

namespace {

template <class Table>
void require_unitary(const Table& table, std::size_t dim) {
  for (std::size_t n = 0; n < dim; ++n)
    if (table.rows[n].norm_sq < 0)
      throw NonUnitaryRepresentation(n, "non-unitary representation: N_" + std::to_string(n) +
                                            "^2 < 0 at level n=" + std::to_string(n));
}

template <class T, class Table, class Convert, class Amplitude>
TruncatedOps<T> assemble_ops(const Table& table, std::size_t dim, Convert convert, Amplitude amplitude) {
  const std::size_t k = table.order();
  TruncatedOps<T> ops;
  ops.dim = dim;
  ops.H = Matrix<T>(dim, dim);
  ops.J.assign(k - 1, Matrix<T>(dim, dim));
  ops.a_dag = Matrix<T>(dim, dim);
  for (std::size_t n = 0; n < dim; ++n) {
    ops.H(n, n) = convert(table.rows[n].alphas[0]);
    for (std::size_t i = 1; i < k; ++i) ops.J[i - 1](n, n) = convert(table.rows[n].alphas[i]);
    if (n + 1 < dim) ops.a_dag(n + 1, n) = amplitude(table.rows[n].norm_sq);
  }
  ops.a = ops.a_dag.transpose();
  return ops;
}

}  // namespace

ExactOps truncated_operators_exact(const GHASpec& spec, std::size_t dim) {
  if (dim == 0) throw InvalidArgument("truncation dimension must be >= 1");
  const auto table = spectrum_exact(spec, dim - 1);
  require_unitary(table, dim);
  return assemble_ops<RadicalSum>(
      table, dim, [](const Rational& r) { return RadicalSum(r); },
      [](const Rational& nsq) { return RadicalSum::sqrt(nsq); });
}

FloatOps truncated_operators_float(const GHASpec& spec, std::size_t dim) {
  if (dim == 0) throw InvalidArgument("truncation dimension must be >= 1");
  const auto table = spectrum_float(spec, dim - 1);
  require_unitary(table, dim);
  return assemble_ops<double>(
      table, dim, [](double v) { return v; }, [](double nsq) { return std::sqrt(nsq); });
}

bool ResidualReport::all_pass() const {
  for (const auto& r : relations)
    if (!r.pass) return false;
  return true;
}

namespace {

double magnitude(double v) { return std::abs(v); }
double magnitude(const RadicalSum& v) { return std::abs(v.to_double()); }
bool is_zero(double v) { return v == 0.0; }
bool is_zero(const RadicalSum& v) { return v.is_zero(); }

double apply(const FunctionSpec& f, double x) { return f(x); }
RadicalSum apply(const FunctionSpec& f, const RadicalSum& x) { return RadicalSum(f(x.as_rational())); }

// f applied entrywise to the diagonal of a diagonal matrix.
template <class T>
Matrix<T> apply_diagonal(const FunctionSpec& f, const Matrix<T>& diag) {
  Matrix<T> out(diag.rows(), diag.cols());
  for (std::size_t n = 0; n < diag.rows(); ++n) out(n, n) = apply(f, diag(n, n));
  return out;
}

template <class T>
RelationResidual residual(int family, std::string name, const Matrix<T>& diff, std::size_t row_end,
                          std::size_t col_end, bool exact, double tol) {
  RelationResidual r{family, std::move(name)};
  r.exact = exact;
  r.exactly_zero = true;
  for (std::size_t i = 0; i < row_end; ++i)
    for (std::size_t j = 0; j < col_end; ++j) {
      const T& v = diff(i, j);
      if (!is_zero(v)) r.exactly_zero = false;
      r.max_residual = std::max(r.max_residual, magnitude(v));
    }
  r.pass = exact ? r.exactly_zero : r.max_residual <= tol;
  return r;
}

template <class T>
ResidualReport verify(const TruncatedOps<T>& ops, const GHASpec& spec, double tol, bool exact) {
  const std::size_t k = spec.order();
  const std::size_t d = ops.dim;
  if (tol <= 0) throw InvalidArgument("tolerance must be positive");
  if (d < k)
    throw TruncationTooSmall("truncation dimension " + std::to_string(d) + " is smaller than k=" +
                             std::to_string(k));
  if (ops.J.size() + 1 != k) throw OrderMismatch("operator set does not match algebra order");

  Matrix<T> j_sum(d, d);
  for (const auto& j : ops.J) j_sum = j_sum + j;
  const Matrix<T> f1 = apply_diagonal(spec.functions[0], ops.H);

  ResidualReport report;
  report.relations.push_back(residual(1, "H a+ = a+ (f1(H) + sum J_i)",
                                      ops.H * ops.a_dag - ops.a_dag * (f1 + j_sum), d, d - 1, exact, tol));

  Matrix<T> raised = Matrix<T>::identity(d);
  for (std::size_t i = 2; i <= k; ++i) {
    raised = raised * ops.a_dag;  // (a+)^(i-1)
    const Matrix<T>& ji = ops.J[i - 2];
    const Matrix<T> fi = apply_diagonal(spec.functions[i - 1], ops.H);
    const std::string pow = i == 2 ? "a+" : "(a+)^" + std::to_string(i - 1);
    const std::string name = "J_" + std::to_string(i) + " " + pow + " = " + pow + " f" +
                             std::to_string(i) + "(H)";
    report.relations.push_back(residual(2, name, ji * raised - raised * fi, d, d - i + 1, exact, tol));
  }

  report.relations.push_back(residual(3, "[a, a+] = f1(H) - H + sum J_i",
                                      ops.a * ops.a_dag - ops.a_dag * ops.a - (f1 - ops.H + j_sum), d - 1,
                                      d - 1, exact, tol));

  for (std::size_t i = 2; i <= k; ++i) {
    const Matrix<T>& ji = ops.J[i - 2];
    report.relations.push_back(residual(4, "[H, J_" + std::to_string(i) + "] = 0",
                                        ops.H * ji - ji * ops.H, d, d, exact, tol));
  }
  for (std::size_t i = 2; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j) {
      const Matrix<T>& a = ops.J[i - 2];
      const Matrix<T>& b = ops.J[j - 2];
      report.relations.push_back(residual(
          5, "[J_" + std::to_string(i) + ", J_" + std::to_string(j) + "] = 0", a * b - b * a, d, d, exact, tol));
    }
  return report;
}

}  // namespace

ResidualReport verify_relations(const ExactOps& ops, const GHASpec& spec, double tol) {
  return verify(ops, spec, tol, true);
}

ResidualReport verify_relations(const FloatOps& ops, const GHASpec& spec, double tol) {
  return verify(ops, spec, tol, false);
}

}  // namespace gha
