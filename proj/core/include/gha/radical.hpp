#pragma once

#include <string>
#include <vector>

#include "gha/scalar.hpp"

namespace gha {

/// Exact finite sum  c_1 sqrt(r_1) + ... + c_m sqrt(r_m)  with rational c_j
/// and positive integer radicands. Closed under +, - and *.
///
/// Canonical form: no zero coefficients, and r_i * r_j is never a perfect
/// square for i != j. Square roots of such radicands are linearly
/// independent over Q, so the value is zero iff the term list is empty.
class RadicalSum {
 public:
  struct Term {
    Rational coeff;
    BigInt radicand;
  };

  RadicalSum() = default;
  RadicalSum(int value) : RadicalSum(Rational(value)) {}  // NOLINT: scalar literal
  RadicalSum(const Rational& value);                       // NOLINT: rational embedding

  /// sqrt(value) for value >= 0; throws DomainError otherwise.
  static RadicalSum sqrt(const Rational& value);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const;
  /// Throws DomainError if not rational.
  Rational as_rational() const;
  double to_double() const;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  RadicalSum& operator+=(const RadicalSum& o);
  RadicalSum& operator-=(const RadicalSum& o);
  RadicalSum& operator*=(const RadicalSum& o);
  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
  friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
  friend RadicalSum operator*(RadicalSum a, const RadicalSum& b) { return a *= b; }
  friend RadicalSum operator-(RadicalSum a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
  }
  friend bool operator==(const RadicalSum& a, const RadicalSum& b) { return (a - b).is_zero(); }

  std::string to_string() const;

 private:
  void add_term(Rational coeff, BigInt radicand);

  std::vector<Term> terms_;
};

}  // namespace gha
