// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "support/oracles.hpp"

#include "gha/algebra.hpp"
#include "gha/polynomial.hpp"
#include "gha/recurrence.hpp"
#include "gha/spectral.hpp"
#include "gha/substitution.hpp"

using namespace gha;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

using Check = std::function<void(Outcome&)>;

std::vector<Rational> ones_and_twos(std::size_t k, unsigned mask) {
  std::vector<Rational> l;
  for (std::size_t i = 0; i < k; ++i) l.emplace_back((mask >> i) & 1U ? 2 : 1);
  return l;
}

void golden_ratio(Outcome& o) {
  for (auto [r, s] : {std::pair{1, 1}, {1, 2}, {2, 1}, {3, 2}}) {
    const auto roots = find_roots(char_poly(CoefficientVector({Rational(r), Rational(s)})));
    const double disc = std::sqrt(double(r * r + 4 * s));
    for (double expected : {(r + disc) / 2, (r - disc) / 2}) {
      double best = 1e300;
      for (const auto& z : roots.roots) best = std::min(best, std::abs(z - expected));
      o.require(best <= 1e-12, "root of x^2 - " + std::to_string(r) + "x - " + std::to_string(s));
    }
  }
  const auto fib = find_roots(char_poly(CoefficientVector({Rational(1), Rational(1)})));
  const double err = std::abs(fib.dominant_root() - 1.6180339887498949);
  o.require(err <= 1e-12, "golden ratio");
  o.detail << "golden ratio error " << err;
}

void cross_method(Outcome& o) {
  double worst_rel = 0.0;
  std::size_t cases = 0;
  const auto& frozen = gha::test::oracles()["sequences"];
  for (std::size_t k = 2; k <= 5; ++k)
    for (unsigned mask = 0; mask < (1U << k); ++mask) {
      const CoefficientVector c(ones_and_twos(k, mask));
      const SeedState seeds = unit_seeds(c);
      const auto direct = iterate_sequence(c, seeds, 100).values;
      for (const auto& item : frozen)
        if (CoefficientVector(gha::test::rationals(item["lambdas"])) == c &&
            item["values"].size() == direct.size())
          o.require(gha::test::rationals(item["values"]) == direct, "frozen ladder oracle");
      const RootSet roots = find_roots(char_poly(c));
      const BinetForm form = binet_form(c, seeds, roots);
      for (std::size_t n = 0; n <= 100; ++n) {
        o.require(matrix_power_sequence(c, seeds, n).back() == direct[n], "matrix power");
        if (c.is_unit())
          o.require(Rational(energy_from_miles(static_cast<int>(k), static_cast<long long>(n))) == direct[n],
                    "Miles formula");
        const double e = to_double(direct[n]);
        const double rel = std::abs(binet_eval(form, roots, static_cast<long long>(n)).value - e) / std::max(1.0, std::abs(e));
        worst_rel = std::max(worst_rel, rel);
      }
      ++cases;
    }
  o.require(worst_rel <= 1e-6, "Binet relative error");
  o.detail << cases << " coefficient vectors, worst Binet relative error " << worst_rel;
}

void miles_identity(Outcome& o) {
  for (int k = 2; k <= 6; ++k) {
    const CoefficientVector c(std::vector<Rational>(static_cast<std::size_t>(k), Rational(1)));
    const auto seq = iterate_sequence(c, extend_seeds(c, 1, std::vector<Rational>(k - 1, Rational(0))), 30).values;
    for (long long n = 0; n <= 30; ++n)
      o.require(Rational(miles_number(k, n + k - 1)) == seq[static_cast<std::size_t>(n)],
                "E_n = F_{n+k-1} at k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  o.detail << "k=2..6, n<=30 exact";
}

void operator_relations(Outcome& o) {
  std::size_t specs = 0;
  double worst_float = 0.0;
  for (std::size_t k = 2; k <= 4; ++k)
    for (unsigned mask = 0; mask < (1U << k); ++mask) {
      const CoefficientVector c(ones_and_twos(k, mask));
      std::vector<Rational> vacuum(k, Rational(0));
      vacuum[0] = 1;
      const auto exact_spec = GHASpec::linear(c, vacuum, Arithmetic::Exact);
      for (const auto& r : verify_relations(truncated_operators_exact(exact_spec, 12), exact_spec, 1e-10).relations)
        o.require(r.exactly_zero, "exact residual " + r.relation);
      const auto float_spec = GHASpec::linear(c, vacuum, Arithmetic::Float64);
      for (const auto& r : verify_relations(truncated_operators_float(float_spec, 12), float_spec, 1e-10).relations) {
        worst_float = std::max(worst_float, r.max_residual);
        o.require(r.max_residual <= 1e-10, "float residual " + r.relation);
      }
      ++specs;
    }
  o.detail << specs << " specs at dim 12, exact residuals all 0, worst float residual " << worst_float;
}

void k3_recursion(Outcome& o) {
  GHASpec spec;
  for (const char* f : {"2*x", "x", "2*x"}) spec.functions.push_back(FunctionSpec::parse(f));
  spec.vacuum = {1, 0, 0};
  const auto table = spectrum_exact(spec, 30);
  std::vector<Rational> a;
  for (const auto& row : table.rows) a.push_back(row.alphas.front());
  o.require(a[0] == 1 && a[1] == 2 && a[2] == 5 && a[3] == 14, "prefix 1, 2, 5, 14");
  for (std::size_t n = 2; n + 1 < a.size(); ++n) o.require(a[n + 1] == 2 * a[n] + a[n - 1] + 2 * a[n - 2], "recurrence");
  o.require(a[4] == 37, "alpha_4 = 2*14 + 5 + 2*2");
  o.detail << "alpha = " << to_string(a[0]) << ", " << to_string(a[1]) << ", " << to_string(a[2]) << ", "
           << to_string(a[3]) << ", " << to_string(a[4]) << "; the listed fifth value 35 contradicts the "
           << "recurrence, 37 asserted";
}

void enumeration_counts(Outcome& o) {
  o.require(enumerate_rules(CoefficientVector({Rational(1), Rational(1)})).size() == 2, "(1,1) gives 2 rules");
  o.require(enumerate_rules(CoefficientVector({Rational(2), Rational(1), Rational(2)})).size() == 12,
            "(2,1,2) gives 12 rules");
  std::size_t vectors = 0;
  for (std::size_t k = 1; k <= 4; ++k)
    for (int l1 = 1; l1 <= 3; ++l1)
      for (int l2 = 1; l2 <= 3; ++l2)
        for (int q3 = 1; q3 <= 3; ++q3)
          for (int q4 = 1; q4 <= 3; ++q4) {
            if ((k < 2 && l2 > 1) || (k < 3 && q3 > 1) || (k < 4 && q4 > 1)) continue;
            std::vector<Rational> l{Rational(l1)};
            if (k >= 2) l.emplace_back(l2);
            if (k >= 3) l.emplace_back(l2 * q3);
            if (k >= 4) l.emplace_back(l2 * q3 * q4);
            std::size_t expected = 1;
            for (std::size_t j = 1; j < k; ++j) expected *= static_cast<std::size_t>(l1) + j;
            o.require(enumerate_rules(CoefficientVector(l)).size() == expected, "product formula");
            ++vectors;
          }
  o.detail << vectors << " coefficient vectors match prod(lambda_1 + j)";
}

void chain_growth(Outcome& o) {
  const auto rule = SubstitutionRule::parse("A:ABAC,B:A,C:BB");
  const auto states = grow_chain(rule, 10, 1000);
  o.require(*states[0].word == "A" && *states[1].word == "ABAC" && *states[2].word == "ABACAABACBB",
            "words at steps 0-2");
  const long expected[] = {1, 4, 11, 28, 75};
  for (std::size_t n = 0; n < 5; ++n) o.require(states[n].length == expected[n], "length " + std::to_string(n));
  for (std::size_t n = 3; n + 1 < states.size(); ++n)
    o.require(states[n + 1].length == 2 * states[n].length + states[n - 1].length + 2 * states[n - 2].length,
              "(2,1,2) recurrence");
  const auto note = published_length_note(rule, states);
  o.require(note && note->find("29") != std::string::npos, "29 flagged");
  const auto fib = grow_chain(SubstitutionRule::parse("A:AB,B:A"), 4, 100);
  const long fib_lengths[] = {1, 2, 3, 5, 8};
  for (std::size_t n = 0; n < 5; ++n) o.require(fib[n].length == fib_lengths[n], "Fibonacci length");
  o.detail << "lengths 1, 4, 11, 28, 75 (listed 70 contradicts the recurrence); " << (note ? *note : "");
}

void stochastic_case(Outcome& o) {
  const auto r = stochastic_analysis(CoefficientVector({Rational(1, 2), Rational(1, 2)}));
  o.require(r.stochastic, "stochastic");
  o.require(r.stationary && *r.stationary == std::vector<Rational>{Rational(1, 3), Rational(2, 3)}, "pi = (1/3, 2/3)");
  o.require(r.dominant_root && std::abs(*r.dominant_root - 1.0) <= 1e-12, "dominant root 1");
  o.detail << "pi = (1/3, 2/3), dominant root " << (r.dominant_root ? *r.dominant_root : NAN);
}

void ratio_limit(Outcome& o) {
  const CoefficientVector fib({Rational(1), Rational(1)});
  const auto f = ratio_limit_check(fib, unit_seeds(fib), 40, 1e-10);
  o.require(std::abs(f.ratio - 1.6180339887498949) <= 1e-10, "Fibonacci ratio");
  const CoefficientVector trib({Rational(1), Rational(1), Rational(1)});
  const auto t = ratio_limit_check(trib, unit_seeds(trib), 60, 1e-10);
  const double root = find_roots(char_poly(trib)).dominant_root().real();
  o.require(std::abs(t.ratio - root) <= 1e-10, "Tribonacci ratio");
  o.detail << "deviations " << f.deviation << " and " << std::abs(t.ratio - root);
}

void abelianization_similarity(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> k_dist(1, 4), small(1, 3);
  std::size_t rules = 0;
  for (int sample = 0; sample < 50; ++sample) {
    const int k = k_dist(rng);
    std::vector<Rational> l{Rational(small(rng))};
    if (k >= 2) l.emplace_back(small(rng));
    for (int i = 3; i <= k; ++i) l.push_back(l.back() * small(rng));
    const CoefficientVector c(l);
    const auto companion = characteristic_polynomial(companion_matrix(c));
    for (const auto& rule : enumerate_rules(c)) {
      const auto m = abelianization(rule);
      Matrix<Rational> mq(m.rows(), m.cols());
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t col = 0; col < m.cols(); ++col) mq(r, col) = Rational(m(r, col));
      o.require(characteristic_polynomial(mq) == companion, "char poly of " + rule.to_string());
      ++rules;
    }
  }
  o.detail << "50 samples, " << rules << " rules";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    Check check;
  };
  const Criterion criteria[] = {
      {1, "golden ratio and quadratic roots", 1.0, golden_ratio},
      {2, "cross-method oracle", 10.0, cross_method},
      {3, "Miles identity", 5.0, miles_identity},
      {4, "operator relations", 1.0, operator_relations},
      {5, "k=3 recursion", 1.0, k3_recursion},
      {6, "substitution enumeration counts", 1.0, enumeration_counts},
      {7, "chain growth", 1.0, chain_growth},
      {8, "stochastic case", 1.0, stochastic_case},
      {9, "ratio-limit convergence", 1.0, ratio_limit},
      {10, "abelianization similarity", 5.0, abelianization_similarity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(elapsed < c.budget_s, "runtime budget");
    if (!o.ok) ++failures;
    std::printf("[%s] %2d %-34s %8.3f s (< %g s)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, elapsed, c.budget_s,
                o.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
