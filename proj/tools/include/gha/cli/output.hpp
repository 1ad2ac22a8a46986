#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gha/algebra.hpp"
#include "gha/polynomial.hpp"
#include "gha/scalar.hpp"

namespace gha::cli {

enum class Format { Table, Csv, Json };

Format parse_format(std::string_view name);

// RFC 4180 field quoting.
std::string csv_field(std::string_view value);

// "x^3 - 2*x^2 - x - 2"
std::string polynomial_to_string(const Polynomial<Rational>& p);

std::string complex_to_string(const std::complex<double>& z);

// Exact values become "p/q" strings, floats plain JSON numbers.
nlohmann::json spectrum_to_json(const AnySpectrum& table, std::size_t k, Arithmetic mode);
// Inverse of spectrum_to_json; throws InvalidArgument on malformed input.
AnySpectrum spectrum_from_json(const nlohmann::json& doc);

}  // namespace gha::cli
