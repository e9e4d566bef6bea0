#include "a4csl/counting.hpp"
#include "a4csl/io.hpp"
#include "a4csl/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace a4csl;

namespace {

enum Exit { ok = 0, failure = 1, bad_flags = 2, ceiling = 3, not_admissible = 4, parse_failure = 5 };

unsigned default_threads() {
  if (const char* env = std::getenv("A4CSL_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string matrix_rows(const IntMatrix& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) os << std::setw(6) << m(i, j);
    os << '\n';
  }
  return os.str();
}

std::string rat_matrix_rows(const RatMatrix& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::ostringstream cell;
      cell << m(i, j);
      os << std::setw(10) << cell.str();
    }
    os << '\n';
  }
  return os.str();
}

struct Settings {
  unsigned threads = 1;
  std::uint64_t ideal_ceiling = 50;
  std::uint64_t csl_ceiling = 20;

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.threads = threads;
    o.ideal_ceiling = ideal_ceiling;
    o.csl_ceiling = csl_ceiling;
    return o;
  }
};

int run_coeffs(const Settings& st, std::uint64_t max, const std::string& which, const std::string& format) {
  std::vector<CoeffKind> kinds;
  if (which == "all")
    kinds = {CoeffKind::rot, CoeffKind::brute_rot, CoeffKind::brute, CoeffKind::known};
  else
    kinds = {*parse_coeff_kind(which)};
  std::vector<DirichletCoeffs> cols;
  for (const auto k : kinds) cols.push_back(dirichlet_coeffs(max, k, st.options()));
  if (format == "csv")
    std::cout << coefficients_csv(cols);
  else if (format == "json")
    std::cout << coefficients_json(cols).dump(2) << '\n';
  else
    std::cout << coefficients_table(cols);
  return ok;
}

int run_shell(const Settings& st, std::uint64_t m, const std::string& format, bool members) {
  const EnumerationShell shell = enumerate_shell(m, st.options());
  if (format == "json") {
    std::cout << to_json(shell, members).dump(2) << '\n';
    return ok;
  }
  std::cout << "m             " << shell.m << '\n'
            << "ideals        " << shell.ideal_count() << '\n'
            << "rotations     " << shell.rotation_count() << '\n'
            << "f_rot(m)      " << f_rot(m) << '\n';
  if (shell.csls_computed) std::cout << "csls          " << shell.csls.size() << '\n';
  for (const auto& p : shell.parts)
    std::cout << "norm " << std::setw(12) << p.delta.to_string() << "  vectors " << p.vectors << "  ideals " << p.ideals
              << '\n';
  if (members)
    for (const auto& q : shell.representatives) std::cout << "  " << q.value().to_string() << '\n';
  return ok;
}

int run_csl(const std::string& literal, bool improper, const std::string& format, bool with_matrix) {
  const QuatK value = parse_quat(literal);
  const auto q = membership(value);
  if (!q) throw NotAdmissibleError("not an icosian: " + value.to_string());
  if (q->is_zero()) throw NotAdmissibleError("the zero quaternion generates no rotation");
  if (!is_admissible(primitive_part(*q).second)) throw NotAdmissibleError("N(nr q) is not a perfect square");
  const Json r = rotation_report(*q, improper ? Orientation::improper : Orientation::proper);
  if (format == "json") {
    Json out = r;
    if (!with_matrix) out.erase("rotation_matrix");
    std::cout << out.dump(2) << '\n';
    return ok;
  }
  const Sublattice4 c = sublattice_from_json(r["csl"]);
  std::cout << "q             " << r["q"].dump() << '\n'
            << "primitive     " << r["primitive"].dump() << "  (content " << r["content"].get<std::string>() << ")\n"
            << "orientation   " << r["orientation"].get<std::string>() << '\n'
            << "nr            " << r["nr"].get<std::string>() << '\n'
            << "sigma         " << r["sigma"].dump() << '\n'
            << "denominator   " << r["denominator"].dump() << '\n'
            << "alpha         " << r["alpha"].get<std::string>() << '\n'
            << "csl hnf (columns, L-coordinates)\n"
            << matrix_rows(c.hnf, "  ") << "csl basis (ambient)\n";
  for (const auto& v : c.ambient_basis()) std::cout << "  " << v.to_string() << '\n';
  if (with_matrix) {
    const auto prim = primitive_part(*q).second;
    std::cout << "rotation matrix (L-coordinates)\n"
              << rat_matrix_rows(rotation_matrix(make_rotation(prim, improper ? Orientation::improper
                                                                              : Orientation::proper)),
                                 "  ");
  }
  return ok;
}

int run_verify(const Settings& st, const std::string& suite, std::uint64_t max, std::size_t pairs) {
  VerifyReport r;
  if (suite == "basic")
    r = verify_basic(pairs);
  else if (suite == "theorem39")
    r = verify_theorem39(max ? max : 20, st.options());
  else
    r = verify_counting(max ? max : 50, st.options());
  Json j = r.to_json();
  if (r.ok()) j.erase("failures");
  else {
    Json first = Json::array();
    for (std::size_t i = 0; i < j["failures"].size() && i < 10; ++i) first.push_back(j["failures"][i]);
    j["failures"] = first;
  }
  j["passed"] = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.passed; });
  j["total"] = r.checks.size();
  j.erase("checks");
  std::cout << j.dump(2) << '\n';
  return r.ok() ? ok : failure;
}

int run_asymptotics(const std::vector<std::uint64_t>& xs) {
  const double res = residue();
  std::cout << std::fixed << std::setprecision(6) << "residue             " << res << '\n'
            << "residue (special)   " << residue_from_special_values() << '\n'
            << "constant            " << res / 3 << '\n'
            << std::setprecision(12) << "residue (full)      " << res << '\n'
            << "constant (full)     " << res / 3 << '\n'
            << std::setprecision(6) << "ladder  x  sum f_rot(m<=x)  ratio to x^3/3  rel. diff to residue\n";
  for (const auto& s : asymptotic_ladder(xs))
    std::cout << "  " << std::setw(8) << s.x << std::setw(20) << s.partial_sum << std::setw(16) << s.ratio
              << std::setw(16) << (s.ratio - res) / res << '\n';
  return ok;
}

int run_spectrum(const Settings& st, std::uint64_t formula_max, std::uint64_t enum_max) {
  const SpectrumReport r = spectrum_check(formula_max, enum_max, st.options());
  Json j;
  j["formula_limit"] = r.formula_limit;
  j["enumeration_limit"] = r.enumeration_limit;
  j["formula_gaps"] = r.formula_gaps;
  j["enumeration_gaps"] = r.enumeration_gaps;
  j["ok"] = r.ok();
  std::cout << j.dump(2) << '\n';
  return r.ok() ? ok : failure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coincidence site lattices of the root lattice A4"};
  app.require_subcommand(1);
  Settings st;
  st.threads = default_threads();
  app.add_option("--threads", st.threads, "worker threads (default: A4CSL_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--ideal-ceiling", st.ideal_ceiling, "largest index enumerated for ideal counts")
      ->capture_default_str();
  app.add_option("--csl-ceiling", st.csl_ceiling, "largest index enumerated for CSL dedup")->capture_default_str();

  const std::vector<std::string> formats{"csv", "json", "table"};

  std::uint64_t coeff_max = 11;
  std::string which = "rot", coeff_format = "csv";
  auto* coeffs = app.add_subcommand("coeffs", "Dirichlet series coefficients");
  coeffs->add_option("--max", coeff_max, "largest index")->check(CLI::PositiveNumber)->capture_default_str();
  coeffs->add_option("--which", which)
      ->check(CLI::IsMember({"rot", "known", "brute", "brute-rot", "all"}))
      ->capture_default_str();
  coeffs->add_option("--format", coeff_format)->check(CLI::IsMember(formats))->capture_default_str();

  std::uint64_t shell_m = 1;
  std::string shell_format = "json";
  bool no_members = false;
  auto* shell = app.add_subcommand("shell", "enumerate the rotations of one index");
  shell->add_option("--m", shell_m, "coincidence index")->required()->check(CLI::PositiveNumber);
  shell->add_option("--format", shell_format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  shell->add_flag("--no-members", no_members, "omit representatives and CSL bases");

  std::string literal, csl_format = "table";
  bool improper = false, with_matrix = false;
  auto* cslc = app.add_subcommand("csl", "CSL of the rotation generated by a quaternion");
  cslc->add_option("--q", literal, "quaternion literal, e.g. \"(t,2t,0,0)\"")->required();
  cslc->add_flag("--improper", improper, "compose with x -> conj(x)");
  cslc->add_flag("--matrix", with_matrix, "also print the rotation matrix");
  cslc->add_option("--format", csl_format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();

  std::string suite;
  std::uint64_t verify_max = 0;
  std::size_t pairs = 1000;
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"basic", "theorem39", "counting"}));
  verify->add_option("--max", verify_max, "largest index (default 20 for theorem39, 50 for counting)");
  verify->add_option("--pairs", pairs, "random samples for the basic suite")->capture_default_str();

  std::vector<std::uint64_t> ladder{10, 100, 1000, 10000};
  auto* asym = app.add_subcommand("asymptotics", "residue, asymptotic constant and partial-sum ladder");
  asym->add_option("--ladder", ladder, "x values")->delimiter(',')->capture_default_str();

  std::uint64_t spec_formula = 1000, spec_enum = 20;
  auto* spectrum = app.add_subcommand("spectrum", "check that every index occurs");
  spectrum->add_option("--max", spec_formula, "limit for the formula route")->capture_default_str();
  spectrum->add_option("--enum-max", spec_enum, "limit for the enumeration route")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_flags;
  }

  try {
    if (*coeffs) return run_coeffs(st, coeff_max, which, coeff_format);
    if (*shell) return run_shell(st, shell_m, shell_format, !no_members);
    if (*cslc) return run_csl(literal, improper, csl_format, with_matrix);
    if (*verify) return run_verify(st, suite, verify_max, pairs);
    if (*asym) return run_asymptotics(ladder);
    if (*spectrum) return run_spectrum(st, spec_formula, spec_enum);
  } catch (const CeilingExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ceiling;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parse_failure;
  } catch (const NotAdmissibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return not_admissible;
  } catch (const NotPrimitiveError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return not_admissible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failure;
  }
  return failure;
}
