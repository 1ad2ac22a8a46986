#include "gha/cli/output.hpp"

#include <cmath>

#include "gha/errors.hpp"

namespace gha::cli {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (expected table, csv or json)");
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string polynomial_to_string(const Polynomial<Rational>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational c = p.coefficient(static_cast<std::size_t>(d));
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const bool unit = mag == 1 && d > 0;
    if (!unit) out += to_string(mag);
    if (d > 0) {
      if (!unit) out += "*";
      out += d == 1 ? "x" : "x^" + std::to_string(d);
    }
  }
  return out;
}

std::string complex_to_string(const std::complex<double>& z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string s = format_double(z.real());
  s += z.imag() < 0 ? " - " : " + ";
  s += format_double(std::abs(z.imag())) + "i";
  return s;
}

namespace {

json value_to_json(const Rational& v) { return to_string(v); }
json value_to_json(double v) { return v; }

template <class T>
T value_from_json(const json& v);

template <>
Rational value_from_json<Rational>(const json& v) {
  if (!v.is_string()) throw InvalidArgument("exact spectrum values must be strings");
  return parse_rational(v.get<std::string>());
}

template <>
double value_from_json<double>(const json& v) {
  if (!v.is_number()) throw InvalidArgument("float spectrum values must be numbers");
  return v.get<double>();
}

template <class T>
json table_to_json(const SpectrumTable<T>& table, std::size_t k, Arithmetic mode) {
  json rows = json::array();
  for (std::size_t n = 0; n < table.rows.size(); ++n) {
    const auto& row = table.rows[n];
    json alphas = json::array();
    for (const auto& a : row.alphas) alphas.push_back(value_to_json(a));
    rows.push_back({{"n", n},
                    {"alpha", std::move(alphas)},
                    {"norm_sq", value_to_json(row.norm_sq)},
                    {"norm", row.norm ? json(*row.norm) : json(nullptr)}});
  }
  const auto report = physicality_report(table);
  auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
  return {{"k", k},
          {"arithmetic", std::string(to_string(mode))},
          {"rows", std::move(rows)},
          {"flags",
           {{"physical_energy", table.physical_energy},
            {"unitary", table.unitary},
            {"nondecreasing", table.nondecreasing}}},
          {"first_violation",
           {{"negative_energy", opt(report.negative_energy)},
            {"negative_norm_sq", opt(report.negative_norm_sq)},
            {"decrease", opt(report.decrease)}}}};
}

template <class T>
SpectrumTable<T> table_from_json(const json& doc) {
  SpectrumTable<T> table;
  const std::size_t k = doc.at("k").get<std::size_t>();
  for (const auto& r : doc.at("rows")) {
    SpectrumRow<T> row;
    const auto& alphas = r.at("alpha");
    if (alphas.size() != k) throw InvalidArgument("row width does not match k");
    for (const auto& a : alphas) row.alphas.push_back(value_from_json<T>(a));
    row.norm_sq = value_from_json<T>(r.at("norm_sq"));
    if (!r.at("norm").is_null()) row.norm = r.at("norm").get<double>();
    table.rows.push_back(std::move(row));
  }
  const auto& flags = doc.at("flags");
  table.physical_energy = flags.at("physical_energy").get<bool>();
  table.unitary = flags.at("unitary").get<bool>();
  table.nondecreasing = flags.at("nondecreasing").get<bool>();
  return table;
}

}  // namespace

json spectrum_to_json(const AnySpectrum& table, std::size_t k, Arithmetic mode) {
  return std::visit([&](const auto& t) { return table_to_json(t, k, mode); }, table);
}

AnySpectrum spectrum_from_json(const json& doc) {
  try {
    const std::string mode = doc.at("arithmetic").get<std::string>();
    if (mode == "exact") return table_from_json<Rational>(doc);
    if (mode == "float64") return table_from_json<double>(doc);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed spectrum JSON: ") + e.what());
  }
  throw InvalidArgument("malformed spectrum JSON: unknown arithmetic mode");
}

}  // namespace gha::cli
