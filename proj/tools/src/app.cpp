#include "gha/cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "gha/algebra.hpp"
#include "gha/cli/output.hpp"
#include "gha/cli/spec_file.hpp"
#include "gha/errors.hpp"
#include "gha/recurrence.hpp"
#include "gha/spectral.hpp"
#include "gha/substitution.hpp"

namespace gha::cli {
namespace {

using nlohmann::json;

// A requested method cannot run on this input (exit 3).
class MethodError : public Error {
 public:
  using Error::Error;
};

constexpr double kDefaultResidualTol = 1e-10;

struct SpectrumOptions {
  std::string spec_path;
  std::string format = "table";
  bool strict_physical = false;
  std::optional<std::size_t> n_max;
};

struct SequenceOptions {
  std::string coeffs;
  std::string seeds;
  std::size_t n = 10;
  std::string method = "direct";
  bool check = false;
  std::string format = "table";
  double tol = kDefaultRootTol;
  int max_iter = kDefaultMaxIter;
};

struct CoeffOptions {
  std::string coeffs;
  std::string format = "table";
  double tol = kDefaultRootTol;
  int max_iter = kDefaultMaxIter;
};

struct EnumerateOptions {
  std::string coeffs;
  std::string format = "table";
};

struct GrowOptions {
  std::string rule;
  std::size_t steps = 5;
  std::size_t word_cap = 200;
  bool check = false;
  std::string format = "table";
};

struct VerifyOptions {
  std::string spec_path;
  std::size_t dim = 0;
  std::optional<double> tol;
};

CoefficientVector coefficients_from(const std::string& text) {
  return CoefficientVector(parse_rational_list(text));
}

SeedState seeds_from(const CoefficientVector& coeffs, const std::string& text) {
  if (text.empty()) return unit_seeds(coeffs);
  auto vacuum = parse_rational_list(text);
  if (vacuum.size() != coeffs.order())
    throw OrderMismatch("--seeds: expected " + std::to_string(coeffs.order()) + " vacuum values (k=" +
                        std::to_string(coeffs.order()) + "), got " + std::to_string(vacuum.size()));
  Rational alpha0 = vacuum.front();
  return extend_seeds(coeffs, alpha0, std::vector<Rational>(vacuum.begin() + 1, vacuum.end()));
}

// ---------------------------------------------------------------- spectrum

template <class T>
std::string cell(const T& v) {
  if constexpr (std::is_same_v<T, double>)
    return format_double(v);
  else
    return to_string(v);
}

template <class T>
void print_spectrum_table(const SpectrumTable<T>& t, std::size_t k, std::ostream& out) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"n"};
  for (std::size_t i = 1; i <= k; ++i) header.push_back("alpha^(" + std::to_string(i) + ")");
  header.push_back("N^2");
  header.push_back("N");
  grid.push_back(header);
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    std::vector<std::string> line{std::to_string(n)};
    for (const auto& a : t.rows[n].alphas) line.push_back(cell(a));
    line.push_back(cell(t.rows[n].norm_sq));
    line.push_back(t.rows[n].norm ? format_double(*t.rows[n].norm) : "undefined");
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : grid)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      out << line[c];
      if (c + 1 < line.size()) out << std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << '\n';
  }
  const auto report = physicality_report(t);
  auto flag = [](bool ok, const std::optional<std::size_t>& at) {
    return ok ? std::string("yes") : "no (first at n=" + std::to_string(*at) + ")";
  };
  out << "physical energy (alpha >= 0): " << flag(report.physical_energy(), report.negative_energy) << '\n';
  out << "unitary (N^2 >= 0):           " << flag(report.unitary(), report.negative_norm_sq) << '\n';
  out << "nondecreasing:                " << flag(report.nondecreasing(), report.decrease) << '\n';
}

template <class T>
void print_spectrum_csv(const SpectrumTable<T>& t, std::size_t k, std::ostream& out) {
  out << "n";
  for (std::size_t i = 1; i <= k; ++i) out << ",alpha_" << i;
  out << ",norm_sq,norm\n";
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    out << n;
    for (const auto& a : t.rows[n].alphas) out << ',' << csv_field(cell(a));
    out << ',' << csv_field(cell(t.rows[n].norm_sq)) << ',';
    if (t.rows[n].norm) out << format_double(*t.rows[n].norm);
    out << '\n';
  }
}

int cmd_spectrum(const SpectrumOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const SpecFile file = load_spec_file(o.spec_path);
  const std::size_t n_max = o.n_max.value_or(file.n_max);
  const std::size_t k = file.order();
  const AnySpectrum table = spectrum(file.algebra, n_max);

  switch (format) {
    case Format::Json: out << spectrum_to_json(table, k, file.algebra.arithmetic).dump(2) << '\n'; break;
    case Format::Csv: std::visit([&](const auto& t) { print_spectrum_csv(t, k, out); }, table); break;
    case Format::Table:
      out << "# k=" << k << " arithmetic=" << to_string(file.algebra.arithmetic) << '\n';
      for (std::size_t i = 0; i < k; ++i)
        out << "# f" << (i + 1) << "(x) = " << file.algebra.functions[i].to_string() << '\n';
      std::visit([&](const auto& t) { print_spectrum_table(t, k, out); }, table);
      break;
  }
  const bool physical = std::visit(
      [](const auto& t) { return t.physical_energy && t.unitary && t.nondecreasing; }, table);
  return o.strict_physical && !physical ? kExitPhysicality : kExitOk;
}

// ---------------------------------------------------------------- sequence

int cmd_sequence(const SequenceOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const CoefficientVector coeffs = coefficients_from(o.coeffs);
  const SeedState seeds = seeds_from(coeffs, o.seeds);
  const std::size_t k = coeffs.order();
  const std::size_t n = o.n;
  const auto direct = iterate_sequence(coeffs, seeds, n).values;

  std::vector<Rational> exact;
  std::vector<double> approx;
  if (o.method == "direct") {
    exact = direct;
  } else if (o.method == "matrix") {
    for (std::size_t j = 0; j <= n; ++j) exact.push_back(matrix_power_sequence(coeffs, seeds, j).back());
  } else if (o.method == "miles") {
    if (!coeffs.is_unit()) throw MethodError("miles requires unit coefficients (all lambda_i = 1)");
    const SeedState unit = unit_seeds(coeffs);
    if (seeds.extended != unit.extended) throw MethodError("miles requires unit seed (1, 0, ..., 0)");
    for (std::size_t j = 0; j <= n; ++j)
      exact.emplace_back(energy_from_miles(static_cast<int>(k), static_cast<long long>(j)));
  } else if (o.method == "binet") {
    const RootSet roots = find_roots(char_poly(coeffs), o.tol, o.max_iter);
    const BinetForm form = binet_form(coeffs, seeds, roots);
    for (std::size_t j = 0; j <= n; ++j) approx.push_back(binet_eval(form, roots, static_cast<long long>(j)).value);
  } else {
    throw InvalidArgument("unknown method '" + o.method + "' (expected direct, matrix, binet or miles)");
  }
  const bool is_exact = approx.empty();

  auto value_text = [&](std::size_t j) { return is_exact ? to_string(exact[j]) : format_double(approx[j]); };

  // discrepancy against direct iteration
  Rational exact_disc = 0;
  double abs_disc = 0.0, rel_disc = 0.0;
  std::vector<double> errors(n + 1, 0.0);
  for (std::size_t j = 0; j <= n; ++j) {
    if (is_exact) {
      const Rational d = abs(Rational(exact[j] - direct[j]));
      exact_disc = std::max(exact_disc, d);
      errors[j] = to_double(d);
    } else {
      const double e = to_double(direct[j]);
      errors[j] = std::abs(approx[j] - e);
      abs_disc = std::max(abs_disc, errors[j]);
      rel_disc = std::max(rel_disc, errors[j] / std::max(1.0, std::abs(e)));
    }
  }
  if (is_exact) abs_disc = to_double(exact_disc);

  switch (format) {
    case Format::Json: {
      json doc{{"method", o.method}, {"k", k}};
      json coeff_list = json::array();
      for (const auto& l : coeffs.values()) coeff_list.push_back(to_string(l));
      doc["coefficients"] = std::move(coeff_list);
      json values = json::array();
      for (std::size_t j = 0; j <= n; ++j) {
        if (is_exact)
          values.push_back(to_string(exact[j]));
        else
          values.push_back(approx[j]);
      }
      doc["values"] = std::move(values);
      if (o.check) {
        doc["check"] = is_exact ? json{{"max_abs_discrepancy", to_string(exact_disc)}}
                                : json{{"max_abs_discrepancy", abs_disc}, {"max_rel_discrepancy", rel_disc}};
      }
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "n,value" << (o.check ? ",direct,abs_error" : "") << '\n';
      for (std::size_t j = 0; j <= n; ++j) {
        out << j << ',' << csv_field(value_text(j));
        if (o.check) out << ',' << csv_field(to_string(direct[j])) << ',' << format_double(errors[j]);
        out << '\n';
      }
      break;
    case Format::Table:
      out << "# method=" << o.method << " k=" << k << '\n';
      for (std::size_t j = 0; j <= n; ++j) out << j << "  " << value_text(j) << '\n';
      if (o.check) {
        if (is_exact)
          out << "check: max |" << o.method << " - direct| = " << to_string(exact_disc) << '\n';
        else
          out << "check: max |" << o.method << " - direct| = " << format_double(abs_disc)
              << " (relative " << format_double(rel_disc) << ")\n";
      }
      break;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- eigen / stochastic

int cmd_eigen(const CoeffOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const CoefficientVector coeffs = coefficients_from(o.coeffs);
  const auto poly = char_poly(coeffs);
  const RootSet roots = find_roots(poly, o.tol, o.max_iter);
  switch (format) {
    case Format::Json: {
      json rs = json::array();
      for (const auto& z : roots.roots) rs.push_back({{"re", z.real()}, {"im", z.imag()}, {"modulus", std::abs(z)}});
      json doc{{"char_poly", polynomial_to_string(poly)},
               {"roots", std::move(rs)},
               {"dominant_index", roots.dominant},
               {"dominant", {{"re", roots.dominant_root().real()}, {"im", roots.dominant_root().imag()}}},
               {"min_root_distance", std::isfinite(roots.condition) ? json(roots.condition) : json(nullptr)},
               {"near_repeated", roots.near_repeated},
               {"iterations", roots.iterations}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "index,re,im,modulus,dominant\n";
      for (std::size_t i = 0; i < roots.roots.size(); ++i)
        out << i << ',' << format_double(roots.roots[i].real()) << ',' << format_double(roots.roots[i].imag())
            << ',' << format_double(std::abs(roots.roots[i])) << ',' << (i == roots.dominant ? "true" : "false")
            << '\n';
      break;
    case Format::Table:
      out << "char poly: " << polynomial_to_string(poly) << '\n';
      for (std::size_t i = 0; i < roots.roots.size(); ++i)
        out << "root[" << i << "]: " << complex_to_string(roots.roots[i]) << "  |z| = "
            << format_double(std::abs(roots.roots[i])) << '\n';
      out << "dominant: " << complex_to_string(roots.dominant_root()) << '\n';
      if (std::isfinite(roots.condition))
        out << "min root distance: " << format_double(roots.condition)
            << (roots.near_repeated ? " (near-repeated; Binet form unavailable)" : "") << '\n';
      break;
  }
  return kExitOk;
}

int cmd_stochastic(const CoeffOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const CoefficientVector coeffs = coefficients_from(o.coeffs);
  const StochasticReport r = stochastic_analysis(coeffs);
  if (format == Format::Table) {
    out << "coefficient sum: " << to_string(r.coefficient_sum) << '\n';
    out << "nonnegative: " << (r.nonnegative ? "yes" : "no") << '\n';
    out << "stochastic: " << (r.stochastic ? "yes" : "no") << '\n';
    if (r.stationary) {
      out << "stationary vector: (";
      for (std::size_t i = 0; i < r.stationary->size(); ++i) out << (i ? ", " : "") << to_string((*r.stationary)[i]);
      out << ")\n";
    }
    if (r.dominant_root)
      out << "dominant root: " << format_double(*r.dominant_root) << (r.dominant_is_one ? " (= 1)" : "") << '\n';
    return kExitOk;
  }
  json doc{{"coefficient_sum", to_string(r.coefficient_sum)},
           {"nonnegative", r.nonnegative},
           {"stochastic", r.stochastic}};
  if (r.stationary) {
    json pi = json::array();
    for (const auto& v : *r.stationary) pi.push_back(to_string(v));
    doc["stationary"] = std::move(pi);
  } else {
    doc["stationary"] = nullptr;
  }
  doc["dominant_root"] = r.dominant_root ? json(*r.dominant_root) : json(nullptr);
  if (format == Format::Json) {
    out << doc.dump(2) << '\n';
  } else {
    out << "coefficient_sum,nonnegative,stochastic,stationary,dominant_root\n"
        << csv_field(to_string(r.coefficient_sum)) << ',' << r.nonnegative << ',' << r.stochastic << ',';
    if (r.stationary) {
      std::string pi;
      for (std::size_t i = 0; i < r.stationary->size(); ++i) pi += (i ? " " : "") + to_string((*r.stationary)[i]);
      out << csv_field(pi);
    }
    out << ',' << (r.dominant_root ? format_double(*r.dominant_root) : "") << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- subst

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const auto rules = enumerate_rules(coefficients_from(o.coeffs));
  switch (format) {
    case Format::Table:
      for (const auto& r : rules) out << r.to_string() << '\n';
      break;
    case Format::Csv:
      out << "index,rule\n";
      for (std::size_t i = 0; i < rules.size(); ++i) out << i << ',' << csv_field(rules[i].to_string()) << '\n';
      break;
    case Format::Json: {
      json list = json::array();
      for (const auto& r : rules) list.push_back(r.to_string());
      out << json{{"count", rules.size()}, {"rules", std::move(list)}}.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

std::vector<double> frequencies(const ChainState& s) {
  std::vector<double> f;
  const Rational total(s.length);
  for (const auto& c : s.letter_counts) f.push_back(to_double(Rational(Rational(c) / total)));
  return f;
}

int cmd_grow(const GrowOptions& o, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(o.format);
  const SubstitutionRule rule = SubstitutionRule::parse(o.rule);
  const auto states = grow_chain(rule, o.steps, o.word_cap);
  const auto note = published_length_note(rule, states);
  std::optional<GrowthLawReport> law;
  if (o.check) law = growth_law_check(rule, o.steps);
  const std::size_t k = rule.alphabet_size();

  switch (format) {
    case Format::Table:
      out << "# rule " << rule.to_string() << '\n';
      for (const auto& s : states) {
        out << "step " << s.step << "  length " << s.length.str() << "  word "
            << (s.word ? *s.word : std::string("(omitted)")) << "  freq (";
        const auto f = frequencies(s);
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? ", " : "") << format_double(f[i]);
        out << ")\n";
      }
      if (note) out << *note << '\n';
      break;
    case Format::Csv:
      out << "step,length,word";
      for (std::size_t i = 0; i < k; ++i) out << ",freq_" << letter(i);
      out << '\n';
      for (const auto& s : states) {
        out << s.step << ',' << s.length.str() << ',' << (s.word ? csv_field(*s.word) : "");
        for (double f : frequencies(s)) out << ',' << format_double(f);
        out << '\n';
      }
      if (note) err << *note << '\n';
      break;
    case Format::Json: {
      json list = json::array();
      for (const auto& s : states) {
        json counts = json::array();
        for (const auto& c : s.letter_counts) counts.push_back(c.str());
        list.push_back({{"step", s.step},
                        {"length", s.length.str()},
                        {"word", s.word ? json(*s.word) : json(nullptr)},
                        {"counts", std::move(counts)},
                        {"frequencies", frequencies(s)}});
      }
      json doc{{"rule", rule.to_string()}, {"states", std::move(list)}};
      doc["notes"] = note ? json::array({*note}) : json::array();
      if (law) {
        json lambdas = json::array();
        for (const auto& l : law->lambdas) lambdas.push_back(to_string(l));
        doc["growth_law"] = {{"lambdas", std::move(lambdas)},
                             {"recurrence_holds", law->recurrence_holds},
                             {"frequency_checked", law->frequency_checked},
                             {"frequency_distance", law->frequency_distance},
                             {"passed", law->passed()}};
      }
      out << doc.dump(2) << '\n';
      return law && !law->passed() ? kExitNumerical : kExitOk;
    }
  }
  if (law) {
    std::ostream& dst = format == Format::Table ? out : err;
    dst << "growth law: length(n+1) = ";
    for (std::size_t i = 0; i < law->lambdas.size(); ++i)
      dst << (i ? " + " : "") << to_string(law->lambdas[i]) << "*length(n" << (i ? "-" + std::to_string(i) : "")
          << ")";
    dst << " for n >= " << law->first_checked << ": " << (law->recurrence_holds ? "holds" : "FAILS") << '\n';
    if (law->frequency_checked)
      dst << "letter frequencies vs Perron vector: L-inf distance " << format_double(law->frequency_distance)
          << (law->frequency_ok ? " (ok)" : " (too large)") << '\n';
    return law->passed() ? kExitOk : kExitNumerical;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

template <class Ops>
ResidualReport build_and_verify(const SpecFile& file, std::size_t dim, double tol);

template <>
ResidualReport build_and_verify<ExactOps>(const SpecFile& file, std::size_t dim, double tol) {
  return verify_relations(truncated_operators_exact(file.algebra, dim), file.algebra, tol);
}

template <>
ResidualReport build_and_verify<FloatOps>(const SpecFile& file, std::size_t dim, double tol) {
  return verify_relations(truncated_operators_float(file.algebra, dim), file.algebra, tol);
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const SpecFile file = load_spec_file(o.spec_path);
  const double tol = o.tol.value_or(file.tolerances.residual.value_or(kDefaultResidualTol));
  if (!(tol > 0)) throw InvalidArgument("--tol must be positive");
  if (o.dim < file.order())
    throw TruncationTooSmall("TruncationTooSmall: --dim " + std::to_string(o.dim) + " is smaller than k=" +
                             std::to_string(file.order()));
  const bool exact = file.algebra.arithmetic == Arithmetic::Exact;
  const ResidualReport report =
      exact ? build_and_verify<ExactOps>(file, o.dim, tol) : build_and_verify<FloatOps>(file, o.dim, tol);

  out << "# dim=" << o.dim << " arithmetic=" << to_string(file.algebra.arithmetic) << " tol=" << format_double(tol)
      << '\n';
  std::size_t width = 0;
  for (const auto& r : report.relations) width = std::max(width, r.relation.size());
  for (const auto& r : report.relations) {
    out << r.relation << std::string(width - r.relation.size() + 2, ' ');
    if (r.exact)
      out << (r.exactly_zero ? std::string("0 (exact)") : format_double(r.max_residual) + " (exact, nonzero)");
    else
      out << format_double(r.max_residual);
    out << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  out << (report.all_pass() ? "all relations PASS" : "some relations FAIL") << '\n';
  return report.all_pass() ? kExitOk : kExitNumerical;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended k-step Heisenberg algebra toolkit"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "csv", "json"};

  SpectrumOptions spectrum_opts;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalue ladder and normalization constants");
  spectrum_cmd->add_option("spec", spectrum_opts.spec_path, "JSON spec file")->required();
  spectrum_cmd->add_option("--format", spectrum_opts.format)->check(CLI::IsMember(formats));
  spectrum_cmd->add_flag("--strict-physical", spectrum_opts.strict_physical, "Exit 2 if a physicality flag fails");
  spectrum_cmd->add_option("--n-max", spectrum_opts.n_max, "Override n_max from the spec file");

  SequenceOptions seq_opts;
  auto* seq_cmd = app.add_subcommand("sequence", "Evaluate the recurrence by one method");
  seq_cmd->add_option("--coeffs", seq_opts.coeffs, "lambda_1,...,lambda_k")->required();
  seq_cmd->add_option("--seeds", seq_opts.seeds, "vacuum values alpha_0^(1),...,alpha_0^(k) (default 1,0,...,0)");
  seq_cmd->add_option("-n,--n", seq_opts.n, "last index");
  seq_cmd->add_option("--method", seq_opts.method)->check(CLI::IsMember({"direct", "matrix", "binet", "miles"}));
  seq_cmd->add_flag("--check", seq_opts.check, "Report the discrepancy against direct iteration");
  seq_cmd->add_option("--format", seq_opts.format)->check(CLI::IsMember(formats));
  seq_cmd->add_option("--tol", seq_opts.tol, "root finder tolerance");
  seq_cmd->add_option("--max-iter", seq_opts.max_iter, "root finder iteration cap");

  CoeffOptions eigen_opts;
  auto* eigen_cmd = app.add_subcommand("eigen", "Characteristic polynomial and roots of T_k");
  eigen_cmd->add_option("--coeffs", eigen_opts.coeffs)->required();
  eigen_cmd->add_option("--format", eigen_opts.format)->check(CLI::IsMember(formats));
  eigen_cmd->add_option("--tol", eigen_opts.tol);
  eigen_cmd->add_option("--max-iter", eigen_opts.max_iter);

  CoeffOptions stoch_opts;
  auto* stoch_cmd = app.add_subcommand("stochastic", "Stochastic-matrix test and stationary vector");
  stoch_cmd->add_option("--coeffs", stoch_opts.coeffs)->required();
  stoch_cmd->add_option("--format", stoch_opts.format)->check(CLI::IsMember(formats));

  auto* subst_cmd = app.add_subcommand("subst", "Substitution rules and chains");
  subst_cmd->require_subcommand(1);
  EnumerateOptions enum_opts;
  auto* enum_cmd = subst_cmd->add_subcommand("enumerate", "List every rule for natural coefficients");
  enum_cmd->add_option("--coeffs", enum_opts.coeffs)->required();
  enum_cmd->add_option("--format", enum_opts.format)->check(CLI::IsMember(formats));
  GrowOptions grow_opts;
  auto* grow_cmd = subst_cmd->add_subcommand("grow", "Iterate a rule from the letter A");
  grow_cmd->add_option("--rule", grow_opts.rule, "e.g. A:ABAC,B:A,C:BB")->required();
  grow_cmd->add_option("--steps", grow_opts.steps);
  grow_cmd->add_option("--word-cap", grow_opts.word_cap, "longest word to materialize")
      ->check(CLI::PositiveNumber);
  grow_cmd->add_flag("--check", grow_opts.check, "Verify the length recurrence and letter frequencies");
  grow_cmd->add_option("--format", grow_opts.format)->check(CLI::IsMember(formats));

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Check the operator relations on a truncated Fock space");
  verify_cmd->add_option("spec", verify_opts.spec_path, "JSON spec file")->required();
  verify_cmd->add_option("--dim", verify_opts.dim, "truncation dimension")->required();
  verify_cmd->add_option("--tol", verify_opts.tol, "residual tolerance (float64 mode)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*spectrum_cmd) return cmd_spectrum(spectrum_opts, out);
    if (*seq_cmd) return cmd_sequence(seq_opts, out);
    if (*eigen_cmd) return cmd_eigen(eigen_opts, out);
    if (*stoch_cmd) return cmd_stochastic(stoch_opts, out);
    if (*enum_cmd) return cmd_enumerate(enum_opts, out);
    if (*grow_cmd) return cmd_grow(grow_opts, out, err);
    if (*verify_cmd) return cmd_verify(verify_opts, out);
  } catch (const MethodError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NonUnitaryRepresentation& e) {
    err << "error: " << e.what() << '\n';
    return kExitPhysicality;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInputError;
}

}  // namespace gha::cli
