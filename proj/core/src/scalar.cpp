#include "gha/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <string>

#include "gha/errors.hpp"

namespace gha {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// BigInt's string constructor reads a leading 0 as an octal prefix.
BigInt decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(digits.substr(first)));
}

BigInt pow10(long exponent) {
  BigInt p = 1;
  for (long i = 0; i < exponent; ++i) p *= 10;
  return p;
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view body, std::string_view original) {
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    bool neg = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      neg = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_literal(original);
    exponent = std::stol(std::string(exp_text));
    if (neg) exponent = -exponent;
    body = body.substr(0, e);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      bad_literal(original);
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(body)) bad_literal(original);
    digits = std::string(body);
  }
  if (digits.empty()) bad_literal(original);
  Rational value{decimal_integer(digits)};
  if (exponent > 0) value *= Rational(pow10(exponent));
  if (exponent < 0) value /= Rational(pow10(-exponent));
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text);
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = trim(s.substr(slash + 1));
    if (!all_digits(num) || !all_digits(den)) bad_literal(text);
    BigInt d = decimal_integer(den);
    if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    value = Rational(decimal_integer(num), d);
  } else {
    value = parse_decimal(s, text);
  }
  return negative ? Rational(-value) : value;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  if (trim(text).empty()) return out;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& value) {
  if (denominator_of(value) == 1) return numerator_of(value).str();
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

bool is_integer(const Rational& value) { return denominator_of(value) == 1; }

bool is_perfect_square(const BigInt& value) {
  if (value < 0) return false;
  return mpz_perfect_square_p(value.backend().data()) != 0;
}

BigInt integer_sqrt(const BigInt& value) {
  if (value < 0) throw DomainError("square root of a negative integer");
  return boost::multiprecision::sqrt(value);
}

}  // namespace gha
