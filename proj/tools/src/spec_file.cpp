#include "gha/cli/spec_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gha::cli {
namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Rational rational_field(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return parse_rational(v.dump());
    if (v.is_number_float()) return parse_rational(v.dump());
  } catch (const InvalidArgument& e) {
    throw SpecFileError(where, e.what());
  }
  throw SpecFileError(where, "expected a number or a rational string, got " + std::string(v.type_name()));
}

std::size_t natural_field(const json& obj, const char* key, bool required, std::size_t fallback) {
  if (!obj.contains(key)) {
    if (required) throw SpecFileError(key, "missing required field");
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw SpecFileError(key, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

const json& array_field(const json& obj, const char* key, std::size_t expected_len) {
  const json& v = obj.at(key);
  if (!v.is_array()) throw SpecFileError(key, "expected an array");
  if (v.size() != expected_len)
    throw SpecFileError(key, "expected " + std::to_string(expected_len) + " entries (k=" +
                                 std::to_string(expected_len) + "), got " + std::to_string(v.size()));
  return v;
}

std::optional<double> positive_double(const json& obj, const char* key) {
  if (!obj.contains(key)) return std::nullopt;
  const json& v = obj.at(key);
  if (!v.is_number() || !(v.get<double>() > 0))
    throw SpecFileError(std::string("tolerances.") + key, "expected a positive number");
  return v.get<double>();
}

}  // namespace

SpecFile parse_spec_file(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecFileError(line_col(json_text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON (" +
                                                                               std::string(e.what()) + ")");
  }
  if (!root.is_object()) throw SpecFileError("spec", "top level must be a JSON object");

  SpecFile spec;
  const std::size_t k = natural_field(root, "k", true, 0);
  if (k < 1) throw SpecFileError("k", "order must be >= 1");

  const bool has_linear = root.contains("linear");
  const bool has_functions = root.contains("functions");
  if (has_linear == has_functions)
    throw SpecFileError("functions/linear", "exactly one of \"functions\" or \"linear\" must be present");

  if (has_linear) {
    const json& arr = array_field(root, "linear", k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::string where = "linear[" + std::to_string(i) + "]";
      Rational lambda = rational_field(arr[i], where);
      if (lambda == 0) throw SpecFileError(where, "coefficients must be nonzero");
      spec.algebra.functions.push_back(FunctionSpec::linear(std::move(lambda)));
    }
  } else {
    const json& arr = array_field(root, "functions", k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::string where = "functions[" + std::to_string(i) + "]";
      if (!arr[i].is_string()) throw SpecFileError(where, "expected an expression string");
      try {
        spec.algebra.functions.push_back(FunctionSpec::parse(arr[i].get<std::string>()));
      } catch (const SyntaxError& e) {
        throw SpecFileError(where, e.what());
      }
    }
  }

  if (!root.contains("vacuum")) throw SpecFileError("vacuum", "missing required field");
  const json& vac = array_field(root, "vacuum", k);
  for (std::size_t i = 0; i < k; ++i)
    spec.algebra.vacuum.push_back(rational_field(vac[i], "vacuum[" + std::to_string(i) + "]"));

  spec.n_max = natural_field(root, "n_max", false, 10);

  if (root.contains("arithmetic")) {
    const json& a = root.at("arithmetic");
    const std::string mode = a.is_string() ? a.get<std::string>() : "";
    if (mode == "exact")
      spec.algebra.arithmetic = Arithmetic::Exact;
    else if (mode == "float64")
      spec.algebra.arithmetic = Arithmetic::Float64;
    else
      throw SpecFileError("arithmetic", "expected \"exact\" or \"float64\"");
  } else {
    spec.algebra.arithmetic = spec.algebra.exact_available() ? Arithmetic::Exact : Arithmetic::Float64;
  }
  if (spec.algebra.arithmetic == Arithmetic::Exact && !spec.algebra.exact_available())
    throw SpecFileError("arithmetic", "exact arithmetic requires every function to be affine");

  if (root.contains("tolerances")) {
    const json& t = root.at("tolerances");
    if (!t.is_object()) throw SpecFileError("tolerances", "expected an object");
    spec.tolerances.residual = positive_double(t, "residual");
    spec.tolerances.root = positive_double(t, "root");
    if (t.contains("max_iter")) {
      if (!t.at("max_iter").is_number_integer() || t.at("max_iter").get<long long>() < 1)
        throw SpecFileError("tolerances.max_iter", "expected a positive integer");
      spec.tolerances.max_iter = t.at("max_iter").get<int>();
    }
  }
  return spec;
}

SpecFile load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecFileError(path.string(), "cannot open spec file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_file(buf.str());
}

}  // namespace gha::cli
