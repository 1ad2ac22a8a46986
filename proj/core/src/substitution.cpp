#include "gha/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gha/errors.hpp"
#include "gha/polynomial.hpp"

namespace gha {
namespace {

constexpr std::size_t kMaxImageExponent = 1'000'000;

std::size_t natural(const Rational& value, const std::string& name) {
  if (!is_integer(value) || value < 1)
    throw NonIntegralCoefficients(name + " = " + to_string(value) + " is not a natural number >= 1");
  if (value > kMaxImageExponent) throw InvalidArgument(name + " is too large to spell out as a word");
  return numerator_of(value).convert_to<std::size_t>();
}

void compositions(std::size_t parts, std::size_t total, std::vector<std::size_t>& current,
                  std::vector<std::vector<std::size_t>>& out) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (std::size_t l = 0; l <= total; ++l) {
    current.push_back(l);
    compositions(parts, total - l, current, out);
    current.pop_back();
  }
}

}  // namespace

SubstitutionCoefficients substitution_coefficients(const CoefficientVector& coeffs) {
  const std::size_t k = coeffs.order();
  if (k > kMaxLetters) throw InvalidArgument("at most 26 letters are supported");
  SubstitutionCoefficients out;
  for (std::size_t i = 1; i <= k; ++i)
    out.lambdas.push_back(natural(coeffs.lambda(i), "lambda_" + std::to_string(i)));
  for (std::size_t i = 3; i <= k; ++i)
    out.quotients.push_back(
        natural(Rational(coeffs.lambda(i) / coeffs.lambda(i - 1)), "q_" + std::to_string(i)));
  return out;
}

SubstitutionRule::SubstitutionRule(std::vector<std::string> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxLetters)
    throw InvalidArgument("a rule needs between 1 and 26 letters");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty())
      throw InvalidArgument(std::string("image of ") + letter(i) + " is empty");
    for (char c : images_[i])
      if (c < 'A' || static_cast<std::size_t>(c - 'A') >= images_.size())
        throw InvalidArgument(std::string("image of ") + letter(i) + " uses letter '" + c +
                              "' outside the alphabet A.." + letter(images_.size() - 1));
  }
}

SubstitutionRule SubstitutionRule::parse(std::string_view text) {
  std::vector<std::optional<std::string>> slots(kMaxLetters);
  std::size_t start = 0;
  std::size_t max_letter = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.size() < 3 || item[1] != ':' || item[0] < 'A' || item[0] > 'Z')
      throw InvalidArgument("malformed rule entry '" + std::string(item) + "' (expected e.g. A:AB)");
    const std::size_t idx = static_cast<std::size_t>(item[0] - 'A');
    if (slots[idx]) throw InvalidArgument(std::string("letter ") + item[0] + " defined twice");
    slots[idx] = std::string(item.substr(2));
    max_letter = std::max(max_letter, idx);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::vector<std::string> images;
  for (std::size_t i = 0; i <= max_letter; ++i) {
    if (!slots[i]) throw InvalidArgument(std::string("letter ") + letter(i) + " has no image");
    images.push_back(*slots[i]);
  }
  return SubstitutionRule(std::move(images));
}

std::string SubstitutionRule::apply(std::string_view word) const {
  std::string out;
  for (char c : word) {
    const auto idx = static_cast<std::size_t>(c - 'A');
    if (c < 'A' || idx >= images_.size()) throw InvalidArgument(std::string("letter '") + c + "' not in alphabet");
    out += images_[idx];
  }
  return out;
}

std::string SubstitutionRule::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += letter(i);
    s += ':';
    s += images_[i];
  }
  return s;
}

SubstitutionRule make_rule(const RuleSpec& spec) {
  const auto& lambdas = spec.coefficients.lambdas;
  const std::size_t k = lambdas.size();
  if (k == 0) throw InvalidArgument("empty rule specification");
  if (spec.permutation.size() + 1 != k || spec.composition.size() != k)
    throw OrderMismatch("permutation/composition lengths do not match k");
  if (std::accumulate(spec.composition.begin(), spec.composition.end(), std::size_t{0}) != lambdas[0])
    throw InvalidArgument("composition must sum to lambda_1");
  std::vector<std::size_t> sorted = spec.permutation;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j)
    if (sorted[j] != j + 1) throw InvalidArgument("permutation must rearrange letters A_2..A_k");

  std::vector<std::string> images(k);
  for (std::size_t j = 0; j < k; ++j) {
    images[0].append(spec.composition[j], letter(0));
    if (j + 1 < k) images[0].push_back(letter(spec.permutation[j]));
  }
  if (k >= 2) images[1].assign(lambdas[1], letter(0));
  for (std::size_t i = 2; i < k; ++i) images[i].assign(spec.coefficients.quotients[i - 2], letter(i - 1));
  return SubstitutionRule(std::move(images));
}

std::vector<SubstitutionRule> enumerate_rules(const CoefficientVector& coeffs) {
  RuleSpec spec;
  spec.coefficients = substitution_coefficients(coeffs);
  const std::size_t k = coeffs.order();

  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> scratch;
  compositions(k, spec.coefficients.lambdas[0], scratch, comps);

  std::vector<std::size_t> perm(k - 1);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  std::vector<SubstitutionRule> rules;
  do {
    for (const auto& comp : comps) {
      spec.permutation = perm;
      spec.composition = comp;
      rules.push_back(make_rule(spec));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rules;
}

Matrix<BigInt> abelianization(const SubstitutionRule& rule) {
  const std::size_t k = rule.alphabet_size();
  Matrix<BigInt> m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (char c : rule.image(r)) m(r, static_cast<std::size_t>(c - 'A')) += 1;
  return m;
}

std::vector<ChainState> grow_chain(const SubstitutionRule& rule, std::size_t steps, std::size_t word_cap) {
  if (word_cap < 1) throw InvalidArgument("word cap must be >= 1");
  const std::size_t k = rule.alphabet_size();
  const Matrix<BigInt> m = abelianization(rule);

  std::vector<ChainState> states;
  states.reserve(steps + 1);
  ChainState s;
  s.word = std::string(1, letter(0));
  s.letter_counts.assign(k, BigInt(0));
  s.letter_counts[0] = 1;
  s.length = 1;
  states.push_back(s);

  for (std::size_t step = 1; step <= steps; ++step) {
    const ChainState& prev = states.back();
    ChainState next;
    next.step = step;
    next.letter_counts.assign(k, BigInt(0));
    for (std::size_t r = 0; r < k; ++r) {
      if (prev.letter_counts[r] == 0) continue;
      for (std::size_t c = 0; c < k; ++c) next.letter_counts[c] += prev.letter_counts[r] * m(r, c);
    }
    next.length = 0;
    for (const auto& c : next.letter_counts) next.length += c;
    if (prev.word && next.length <= word_cap) next.word = rule.apply(*prev.word);
    states.push_back(std::move(next));
  }
  return states;
}

namespace {

// Dominant left eigenvector of a nonnegative matrix by power iteration on
// M + I (same eigenvectors, strictly dominant for irreducible M). L1-normalized.
std::vector<double> perron_left_vector(const Matrix<BigInt>& m) {
  const std::size_t k = m.rows();
  std::vector<double> v(k, 1.0 / static_cast<double>(k));
  std::vector<double> w(k);
  for (int iter = 0; iter < 200000; ++iter) {
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t r = 0; r < k; ++r) {
      w[r] += v[r];
      for (std::size_t c = 0; c < k; ++c) w[c] += v[r] * m(r, c).convert_to<double>();
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    double change = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      w[i] /= total;
      change = std::max(change, std::abs(w[i] - v[i]));
    }
    v.swap(w);
    if (change < 1e-15) break;
  }
  return v;
}

}  // namespace

GrowthLawReport growth_law_check(const SubstitutionRule& rule, std::size_t steps) {
  const std::size_t k = rule.alphabet_size();
  if (steps < 2 * k) throw InvalidArgument("growth law check needs steps >= 2k = " + std::to_string(2 * k));

  const Matrix<BigInt> m = abelianization(rule);
  const Polynomial<BigInt> poly = characteristic_polynomial(m);
  GrowthLawReport r;
  for (std::size_t i = 1; i <= k; ++i) r.lambdas.push_back(Rational(-poly.coefficient(k - i)));

  const auto states = grow_chain(rule, steps, 1);
  for (const auto& s : states) r.lengths.push_back(s.length);

  r.first_checked = k - 1;
  for (std::size_t n = k - 1; n + 1 <= steps; ++n) {
    Rational expected = 0;
    for (std::size_t i = 1; i <= k; ++i) expected += r.lambdas[i - 1] * Rational(r.lengths[n + 1 - i]);
    if (expected != Rational(r.lengths[n + 1])) {
      r.recurrence_holds = false;
      r.first_failure = n;
      break;
    }
  }

  const ChainState& last = states.back();
  if (last.length.convert_to<double>() > kFrequencyMinLength) {
    r.frequency_checked = true;
    r.perron_vector = perron_left_vector(m);
    const Rational total(last.length);
    for (std::size_t i = 0; i < k; ++i) {
      r.frequencies.push_back(to_double(Rational(Rational(last.letter_counts[i]) / total)));
      r.frequency_distance = std::max(r.frequency_distance, std::abs(r.frequencies[i] - r.perron_vector[i]));
    }
    r.frequency_ok = r.frequency_distance <= kFrequencyTolerance;
  }
  return r;
}

std::optional<std::string> published_length_note(const SubstitutionRule& rule,
                                                  const std::vector<ChainState>& states) {
  struct Claim {
    const char* rule;
    std::size_t step;
    long printed;
  };
  // A -> ABAC, B -> A, C -> BB is quoted with lengths 1, 4, 11, 29; rewriting gives 28.
  static constexpr Claim kClaims[] = {{"A:ABAC,B:A,C:BB", 3, 29}};
  const std::string text = rule.to_string();
  for (const auto& claim : kClaims) {
    if (text != claim.rule || states.size() <= claim.step) continue;
    const BigInt& actual = states[claim.step].length;
    if (actual == claim.printed) continue;
    return "note: step " + std::to_string(claim.step) + " length is " + actual.str() +
           " by exact rewriting; the published length sequence for this chain lists " +
           std::to_string(claim.printed) + ", which is inconsistent";
  }
  return std::nullopt;
}

}  // namespace gha
