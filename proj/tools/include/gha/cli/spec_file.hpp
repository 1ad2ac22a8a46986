#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "gha/algebra.hpp"
#include "gha/errors.hpp"

namespace gha::cli {

/// Schema or syntax problem in a spec file. `where` names the field or the
/// line:column of a JSON syntax error.
class SpecFileError : public InvalidArgument {
 public:
  SpecFileError(std::string where, const std::string& what)
      : InvalidArgument(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

struct Tolerances {
  std::optional<double> residual;
  std::optional<double> root;
  std::optional<int> max_iter;
};

/// JSON spec file:
///   {
///     "k": 3,
///     "linear": ["2", "1", "2"]          -- or "functions": ["2*x", "x", "2*x"]
///     "vacuum": [1, 0, 0],
///     "n_max": 10,
///     "arithmetic": "exact" | "float64", -- optional; exact when every f_i is affine
///     "tolerances": {"residual": 1e-10, "root": 1e-13, "max_iter": 500}
///   }
/// Rationals may be JSON integers, decimals or strings such as "3/2".
struct SpecFile {
  GHASpec algebra;
  std::size_t n_max = 0;
  Tolerances tolerances;

  std::size_t order() const noexcept { return algebra.order(); }
};

SpecFile parse_spec_file(std::string_view json_text);
SpecFile load_spec_file(const std::filesystem::path& path);

}  // namespace gha::cli
