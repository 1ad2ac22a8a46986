#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gha/matrix.hpp"
#include "gha/recurrence.hpp"
#include "gha/scalar.hpp"

namespace gha {

// Letters A_1 ... A_k are spelled 'A', 'B', ...; at most 26 letters.
inline constexpr std::size_t kMaxLetters = 26;
inline char letter(std::size_t index) { return static_cast<char>('A' + index); }

/// Integral data behind the rule family of a coefficient vector:
/// lambda_i natural (lambda_1 >= 1) and q_i = lambda_i / lambda_{i-1} natural for i >= 3.
struct SubstitutionCoefficients {
  std::vector<std::size_t> lambdas;    // lambda_1 ... lambda_k
  std::vector<std::size_t> quotients;  // q_3 ... q_k
};

// Throws NonIntegralCoefficients naming the offending coefficient.
SubstitutionCoefficients substitution_coefficients(const CoefficientVector& coeffs);

/// One member of the rule family:
///   A_1 -> A_1^{l_1} A_{i_1} A_1^{l_2} ... A_{i_{k-1}} A_1^{l_k},
///   A_2 -> A_1^{lambda_2},  A_i -> A_{i-1}^{q_i} (i >= 3).
struct RuleSpec {
  SubstitutionCoefficients coefficients;
  std::vector<std::size_t> permutation;  // letter indices (0-based) of A_{i_1} ... A_{i_{k-1}}
  std::vector<std::size_t> composition;  // l_1 ... l_k, summing to lambda_1
};

class SubstitutionRule {
 public:
  // images[i] is the image of letter i; every image must be nonempty and use only the k letters.
  explicit SubstitutionRule(std::vector<std::string> images);

  /// "A:ABAC,B:A,C:BB" -- each letter of the alphabet defined exactly once.
  static SubstitutionRule parse(std::string_view text);

  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const std::string& image(std::size_t letter_index) const { return images_.at(letter_index); }
  const std::vector<std::string>& images() const noexcept { return images_; }

  std::string apply(std::string_view word) const;
  std::string to_string() const;

  friend bool operator==(const SubstitutionRule&, const SubstitutionRule&) = default;
  friend auto operator<=>(const SubstitutionRule&, const SubstitutionRule&) = default;

 private:
  std::vector<std::string> images_;
};

SubstitutionRule make_rule(const RuleSpec& spec);

/// Every rule of the family, ordered by (permutation, composition) lexicographically.
std::vector<SubstitutionRule> enumerate_rules(const CoefficientVector& coeffs);

/// M(r, c) = number of occurrences of letter c in the image of letter r.
Matrix<BigInt> abelianization(const SubstitutionRule& rule);

struct ChainState {
  std::size_t step = 0;
  std::optional<std::string> word;  // present while length <= word_cap
  std::vector<BigInt> letter_counts;
  BigInt length;
};

/// Iterates the rule from the single letter A. Counts evolve by
/// counts_{n+1} = counts_n * M and stay exact after words stop being materialized.
std::vector<ChainState> grow_chain(const SubstitutionRule& rule, std::size_t steps, std::size_t word_cap);

struct GrowthLawReport {
  std::vector<Rational> lambdas;  // from det(xI - M) = x^k - sum lambda_i x^{k-i}
  std::vector<BigInt> lengths;
  std::size_t first_checked = 0;
  bool recurrence_holds = true;
  std::optional<std::size_t> first_failure;

  bool frequency_checked = false;  // only when the last length exceeds 1e4
  double frequency_distance = 0.0;  // L-infinity
  bool frequency_ok = true;
  std::vector<double> frequencies;
  std::vector<double> perron_vector;  // normalized dominant left eigenvector of M

  bool passed() const noexcept { return recurrence_holds && frequency_ok; }
};

inline constexpr double kFrequencyTolerance = 0.05;
inline constexpr double kFrequencyMinLength = 1e4;

/// Checks length(n+1) = sum lambda_i length(n-i+1) exactly for n >= k-1 and,
/// for long chains, that letter frequencies approach the Perron vector.
/// Requires steps >= 2k.
GrowthLawReport growth_law_check(const SubstitutionRule& rule, std::size_t steps);

/// Length sequences printed in the literature that disagree with exact
/// rewriting; returns a human-readable note when `states` covers one.
std::optional<std::string> published_length_note(const SubstitutionRule& rule,
                                                  const std::vector<ChainState>& states);

}  // namespace gha
