#include "gha/radical.hpp"

#include <cmath>

#include "gha/errors.hpp"

namespace gha {

RadicalSum::RadicalSum(const Rational& value) {
  if (value != 0) terms_.push_back({value, BigInt(1)});
}

RadicalSum RadicalSum::sqrt(const Rational& value) {
  if (value < 0) throw DomainError("square root of negative rational " + gha::to_string(value));
  RadicalSum out;
  if (value == 0) return out;
  // sqrt(p/q) = sqrt(p*q) / q
  const BigInt q = denominator_of(value);
  out.add_term(Rational(BigInt(1), q), numerator_of(value) * q);
  return out;
}

bool RadicalSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().radicand == 1);
}

Rational RadicalSum::as_rational() const {
  if (!is_rational()) throw DomainError("value " + to_string() + " is irrational");
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

double RadicalSum::to_double() const {
  double acc = 0.0;
  for (const auto& t : terms_)
    acc += gha::to_double(t.coeff) * std::sqrt(t.radicand.convert_to<double>());
  return acc;
}

void RadicalSum::add_term(Rational coeff, BigInt radicand) {
  if (coeff == 0 || radicand == 0) return;
  if (radicand != 1 && is_perfect_square(radicand)) {
    coeff *= Rational(integer_sqrt(radicand));
    radicand = 1;
  }
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->radicand == radicand) {
      it->coeff += coeff;
    } else {
      const BigInt prod = it->radicand * radicand;
      if (!is_perfect_square(prod)) continue;
      // sqrt(radicand) = sqrt(prod) / it->radicand * sqrt(it->radicand)
      it->coeff += coeff * Rational(integer_sqrt(prod), it->radicand);
    }
    if (it->coeff == 0) terms_.erase(it);
    return;
  }
  terms_.push_back({std::move(coeff), std::move(radicand)});
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
  for (const auto& t : o.terms_) add_term(t.coeff, t.radicand);
  return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) {
  for (const auto& t : o.terms_) add_term(-t.coeff, t.radicand);
  return *this;
}

RadicalSum& RadicalSum::operator*=(const RadicalSum& o) {
  RadicalSum out;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      // sqrt(a) sqrt(b) = g sqrt((a/g)(b/g)) with g = gcd(a, b)
      const BigInt g = gcd(a.radicand, b.radicand);
      out.add_term(a.coeff * b.coeff * Rational(g), (a.radicand / g) * (b.radicand / g));
    }
  *this = std::move(out);
  return *this;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += gha::to_string(terms_[i].coeff);
    if (terms_[i].radicand != 1) s += "*sqrt(" + terms_[i].radicand.str() + ")";
  }
  return s;
}

}  // namespace gha
