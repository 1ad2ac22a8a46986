#include "gha/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "gha/errors.hpp"
#include "gha/linear_solve.hpp"

namespace gha {

Polynomial<Rational> char_poly(const CoefficientVector& coeffs) {
  const std::size_t k = coeffs.order();
  std::vector<Rational> c(k + 1);
  c[k] = 1;
  for (std::size_t i = 1; i <= k; ++i) c[k - i] = -coeffs.lambda(i);
  return Polynomial<Rational>(std::move(c));
}

Matrix<Rational> mixed_state_matrix(const CoefficientVector& coeffs) {
  const std::size_t k = coeffs.order();
  Matrix<Rational> m(k, k);
  m(0, 0) = coeffs.lambda(1);
  for (std::size_t c = 1; c < k; ++c) m(0, c) = 1;
  if (k >= 2) m(1, 0) = coeffs.lambda(2);
  for (std::size_t i = 3; i <= k; ++i) m(i - 1, i - 2) = coeffs.lambda(i) / coeffs.lambda(i - 1);
  return m;
}

namespace {

// Ordering for "dominant": modulus, then real part, then imaginary part.
bool dominates(const std::complex<double>& a, const std::complex<double>& b) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  const double scale = std::max({1.0, ma, mb});
  if (std::abs(ma - mb) > 1e-9 * scale) return ma > mb;
  if (std::abs(a.real() - b.real()) > 1e-9 * scale) return a.real() > b.real();
  return a.imag() > b.imag();
}

double min_pairwise_distance(const std::vector<std::complex<double>>& z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) best = std::min(best, std::abs(z[i] - z[j]));
  return best;
}

}  // namespace

namespace {

using WideReal = boost::multiprecision::cpp_bin_float_100;
using WideComplex = boost::multiprecision::cpp_complex_100;

constexpr int kPolishMaxIter = 4000;

enum class SweepStatus { Converged, Stalled, Exhausted };

// Durand-Kerner sweeps on monic coefficients a (ascending, a[k] = 1) in
// place on z. Stalled means every residual stayed at Horner rounding level
// for several sweeps without the steps becoming small, which is what
// clustered roots do.
template <class C, class R>
SweepStatus durand_kerner(const std::vector<C>& a, std::vector<C>& z, R tol, R eps, int max_iter, int& iterations) {
  using std::abs;
  const std::size_t k = z.size();
  auto eval = [&](const C& x) {
    C acc = a[k];
    for (std::size_t i = k; i-- > 0;) acc = acc * x + a[i];
    return acc;
  };
  auto at_noise_floor = [&](const C& x) {
    R bound = 0;
    const R r = abs(x);
    for (std::size_t i = k + 1; i-- > 0;) bound = bound * r + R(abs(a[i]));
    return R(abs(eval(x))) <= R(8 * k) * eps * bound;
  };
  int floor_sweeps = 0;
  for (int iter = 1; iter <= max_iter; ++iter) {
    R worst = 0;
    for (std::size_t j = 0; j < k; ++j) {
      C denom(1);
      for (std::size_t l = 0; l < k; ++l)
        if (l != j) denom *= z[j] - z[l];
      if (denom == C(0)) denom = C(eps);
      const C step = eval(z[j]) / denom;
      z[j] -= step;
      const R size = abs(z[j]);
      worst = std::max(worst, R(R(abs(step)) / (size > R(1) ? size : R(1))));
    }
    iterations = iter;
    if (worst < tol) return SweepStatus::Converged;
    // simple roots pass the step test one sweep after reaching the floor
    floor_sweeps = std::all_of(z.begin(), z.end(), at_noise_floor) ? floor_sweeps + 1 : 0;
    if (floor_sweeps >= 3) return SweepStatus::Stalled;
  }
  return SweepStatus::Exhausted;
}

RootSet solve_monic(const std::vector<WideReal>& wide, double tol, int max_iter) {
  const std::size_t k = wide.size() - 1;
  std::vector<std::complex<double>> a(k + 1);
  for (std::size_t i = 0; i <= k; ++i) a[i] = static_cast<double>(wide[i]);

  double radius = 0.0;
  for (std::size_t i = 0; i < k; ++i) radius = std::max(radius, std::abs(a[i]));
  radius += 1.0;
  constexpr double kRotation = std::numbers::sqrt2 - 1.0;
  std::vector<std::complex<double>> z(k);
  for (std::size_t j = 0; j < k; ++j)
    z[j] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k) +
                                  kRotation);

  RootSet out;
  const SweepStatus status =
      durand_kerner(a, z, tol, std::numeric_limits<double>::epsilon(), max_iter, out.iterations);
  if (status == SweepStatus::Exhausted) throw NonConvergence(max_iter, z);

  if (status == SweepStatus::Stalled) {
    // Clustered roots are only good to about eps^(1/m) in double precision;
    // polish them at 100 digits so reconstruction stays at double accuracy.
    std::vector<WideComplex> wa(wide.begin(), wide.end());
    std::vector<WideComplex> wz;
    for (const auto& r : z) wz.emplace_back(r.real(), r.imag());
    int polish_iterations = 0;
    durand_kerner(wa, wz, WideReal(1e-60), std::numeric_limits<WideReal>::epsilon(), kPolishMaxIter,
                  polish_iterations);
    for (std::size_t j = 0; j < k; ++j)
      z[j] = {static_cast<double>(wz[j].real()), static_cast<double>(wz[j].imag())};
  }

  out.roots = std::move(z);
  out.dominant = 0;
  for (std::size_t j = 1; j < k; ++j)
    if (dominates(out.roots[j], out.roots[out.dominant])) out.dominant = j;
  out.condition = min_pairwise_distance(out.roots);
  out.near_repeated = status == SweepStatus::Stalled || out.condition < kRepeatedRootFactor * tol;
  return out;
}

void check_root_args(int degree, double tol, int max_iter) {
  if (degree < 1) throw InvalidArgument("root finding needs a polynomial of degree >= 1");
  if (!(tol > 0)) throw InvalidArgument("root tolerance must be positive");
  if (max_iter < 1) throw InvalidArgument("max_iter must be >= 1");
}

}  // namespace

RootSet find_roots(const Polynomial<double>& monic, double tol, int max_iter) {
  check_root_args(monic.degree(), tol, max_iter);
  const auto k = static_cast<std::size_t>(monic.degree());
  const WideReal lead = monic.coefficient(k);
  std::vector<WideReal> a;
  for (std::size_t i = 0; i <= k; ++i) a.push_back(WideReal(monic.coefficient(i)) / lead);
  return solve_monic(a, tol, max_iter);
}

RootSet find_roots(const Polynomial<Rational>& monic, double tol, int max_iter) {
  check_root_args(monic.degree(), tol, max_iter);
  const auto k = static_cast<std::size_t>(monic.degree());
  const Rational& lead = monic.coefficient(k);
  std::vector<WideReal> a;
  for (std::size_t i = 0; i <= k; ++i) {
    const Rational c = monic.coefficient(i) / lead;
    a.push_back(WideReal(numerator_of(c)) / WideReal(denominator_of(c)));
  }
  return solve_monic(a, tol, max_iter);
}

BinetForm binet_form(const CoefficientVector& coeffs, const SeedState& seeds, const RootSet& roots) {
  const std::size_t k = coeffs.order();
  if (roots.roots.size() != k) throw OrderMismatch("root count does not match the recurrence order");
  if (seeds.extended.size() != k) throw OrderMismatch("seed state order does not match coefficients");
  if (roots.near_repeated)
    throw RepeatedRoots("characteristic roots are (nearly) repeated; the Binet form needs distinct roots");

  // With d_i = c_i root_i^{-(k-1)}:  sum_i d_i root_i^m = alpha_{m-(k-1)},  m = 0..k-1.
  using C = std::complex<double>;
  Matrix<C> v(k, k);
  std::vector<C> rhs(k);
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) v(m, i) = std::pow(roots.roots[i], static_cast<int>(m));
    rhs[m] = to_double(seeds.extended[m]);
  }
  auto d = solve_linear(std::move(v), std::move(rhs));
  if (!d) throw RepeatedRoots("Vandermonde system is singular");
  BinetForm form;
  form.coefficients.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    form.coefficients[i] = (*d)[i] * std::pow(roots.roots[i], static_cast<int>(k - 1));
  return form;
}

BinetValue binet_eval(const BinetForm& form, const RootSet& roots, long long n) {
  const std::size_t k = form.coefficients.size();
  if (roots.roots.size() != k) throw OrderMismatch("root count does not match the Binet form");
  if (n < -static_cast<long long>(k - 1))
    throw InvalidArgument("Binet evaluation below the interpolation range");
  std::complex<double> sum = 0.0;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::complex<double> term = form.coefficients[i] * std::pow(roots.roots[i], static_cast<double>(n));
    sum += term;
    magnitude += std::abs(term);
  }
  BinetValue out{sum.real(), std::abs(sum.imag())};
  if (out.imaginary_residue > 1e-8 * magnitude)
    throw ImaginaryResidueTooLarge("Binet evaluation at n=" + std::to_string(n) +
                                   " has imaginary residue " + std::to_string(out.imaginary_residue));
  return out;
}

RatioLimitReport ratio_limit_check(const CoefficientVector& coeffs, const SeedState& seeds,
                                   std::size_t n_max, double tol) {
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const RootSet roots = find_roots(char_poly(coeffs));
  const auto& dom = roots.dominant_root();
  const double dom_mod = std::abs(dom);
  if (dom.real() <= 0 || std::abs(dom.imag()) > 1e-9 * std::max(1.0, dom_mod))
    throw InvalidArgument("dominant root is not real and positive");
  double sub = 0.0;
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    if (i != roots.dominant) sub = std::max(sub, std::abs(roots.roots[i]));
  if (sub >= dom_mod * (1.0 - 1e-9)) throw InvalidArgument("dominant root is not strictly separated in modulus");

  const BinetForm form = binet_form(coeffs, seeds, roots);
  if (std::abs(form.coefficients[roots.dominant]) <= tol)
    throw DominantModeAbsent("seeds do not excite the dominant mode");

  const auto seq = iterate_sequence(coeffs, seeds, n_max + 1);
  const Rational& denom = seq.values[n_max];
  if (denom == 0) throw DomainError("alpha_n vanishes at n=" + std::to_string(n_max));

  RatioLimitReport r;
  r.n_max = n_max;
  r.ratio = to_double(Rational(seq.values[n_max + 1] / denom));
  r.dominant = dom.real();
  r.subdominant_modulus = sub;
  r.deviation = std::abs(r.ratio - r.dominant);
  r.tol = tol;
  r.asymptotic = std::pow(sub / dom_mod, static_cast<double>(n_max)) < tol / 10.0;
  r.within_tol = r.deviation <= tol;
  r.passed = !r.asymptotic || r.within_tol;
  return r;
}

StochasticReport stochastic_analysis(const CoefficientVector& coeffs) {
  StochasticReport r;
  r.nonnegative = std::all_of(coeffs.values().begin(), coeffs.values().end(),
                              [](const Rational& l) { return l >= 0; });
  r.coefficient_sum = 0;
  for (const auto& l : coeffs.values()) r.coefficient_sum += l;
  r.stochastic = r.nonnegative && r.coefficient_sum == 1;
  if (!r.stochastic) return r;

  // (T - I)^T pi = 0 with the last equation replaced by sum pi = 1.
  const std::size_t k = coeffs.order();
  const Matrix<Rational> t = companion_matrix(coeffs);
  Matrix<Rational> system(k, k);
  std::vector<Rational> rhs(k, Rational(0));
  for (std::size_t row = 0; row + 1 < k; ++row)
    for (std::size_t c = 0; c < k; ++c) system(row, c) = t(c, row) - (c == row ? 1 : 0);
  for (std::size_t c = 0; c < k; ++c) system(k - 1, c) = 1;
  rhs[k - 1] = 1;
  r.stationary = solve_linear(std::move(system), std::move(rhs));

  const RootSet roots = find_roots(char_poly(coeffs));
  r.dominant_root = roots.dominant_root().real();
  r.dominant_is_one = std::abs(roots.dominant_root() - std::complex<double>(1.0, 0.0)) <= 1e-12;
  return r;
}

}  // namespace gha
