#include "a4csl/counting.hpp"
#include "a4csl/io.hpp"
#include "a4csl/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace a4csl;

namespace {

py::object to_py(const Int& x) { return py::module_::import("builtins").attr("int")(x.str()); }

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object to_py(const std::optional<Int>& x) { return x ? to_py(*x) : py::none(); }

EnumerationOptions options(unsigned threads, std::uint64_t ideal_ceiling, std::uint64_t csl_ceiling) {
  EnumerationOptions o;
  o.threads = threads;
  o.ideal_ceiling = ideal_ceiling;
  o.csl_ceiling = csl_ceiling;
  return o;
}

CoeffKind kind(const std::string& which) {
  const auto k = parse_coeff_kind(which);
  if (!k) throw ParseError("unknown coefficient kind: " + which);
  return *k;
}

Icosian generator(const std::string& q) { return primitive_part(parse_icosian(q)).second; }

Orientation orientation(bool improper) { return improper ? Orientation::improper : Orientation::proper; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coincidence site lattices of the root lattice A4";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotPrimitiveError>(m, "NotPrimitiveError", domain.ptr());
  py::register_exception<NotAdmissibleError>(m, "NotAdmissibleError", domain.ptr());
  py::register_exception<CeilingExceeded>(m, "CeilingExceeded", domain.ptr());
  py::register_exception<ParseError>(m, "ParseError", domain.ptr());

  m.def("f_rot", [](std::uint64_t n) { return to_py(f_rot(n)); }, py::arg("m"));
  m.def("f_rot_prime_power", [](std::uint64_t p, int r) { return to_py(f_rot_prime_power(p, r)); }, py::arg("p"),
        py::arg("r"));
  m.def("f_known", [](std::uint64_t n) { return to_py(f_known(n)); }, py::arg("m"));

  m.def(
      "dirichlet_coeffs",
      [](std::uint64_t n, const std::string& which, unsigned threads, std::uint64_t ic, std::uint64_t cc) {
        const auto c = dirichlet_coeffs(n, kind(which), options(threads, ic, cc));
        py::list out;
        for (const auto& v : c.values) out.append(to_py(v));
        return out;
      },
      py::arg("n"), py::arg("which") = "rot", py::arg("threads") = 1, py::arg("ideal_ceiling") = 50,
      py::arg("csl_ceiling") = 20);
  m.def(
      "coefficients_csv",
      [](std::uint64_t n, const std::vector<std::string>& which, unsigned threads, std::uint64_t ic,
         std::uint64_t cc) {
        std::vector<DirichletCoeffs> cols;
        for (const auto& w : which) cols.push_back(dirichlet_coeffs(n, kind(w), options(threads, ic, cc)));
        return coefficients_csv(cols);
      },
      py::arg("n"), py::arg("which") = std::vector<std::string>{"rot"}, py::arg("threads") = 1,
      py::arg("ideal_ceiling") = 50, py::arg("csl_ceiling") = 20);

  m.def("parse_golden", [](const std::string& s) { return parse_golden(s).to_string(); }, py::arg("text"));
  m.def("parse_quat", [](const std::string& s) { return to_py(to_json(parse_quat(s))); }, py::arg("text"));
  m.def("is_icosian", [](const std::string& s) { return membership(parse_quat(s)).has_value(); }, py::arg("q"));
  m.def("nr", [](const std::string& q) { return parse_icosian(q).nr().to_string(); }, py::arg("q"));
  m.def("is_primitive", [](const std::string& q) { return is_primitive(parse_icosian(q)); }, py::arg("q"));
  m.def("is_admissible", [](const std::string& q) { return is_admissible(parse_icosian(q)); }, py::arg("q"));
  m.def("sigma", [](const std::string& q) { return to_py(sigma(generator(q))); }, py::arg("q"));
  m.def("denominator", [](const std::string& q) { return to_py(denominator(generator(q))); }, py::arg("q"));
  m.def("csl", [](const std::string& q) { return to_py(to_json(csl(generator(q)))); }, py::arg("q"));
  m.def(
      "csl_by_intersection", [](const std::string& q) { return to_py(to_json(csl_by_intersection(generator(q)))); },
      py::arg("q"));
  m.def("ssl", [](const std::string& q) { return to_py(to_json(ssl(generator(q)))); }, py::arg("q"));
  m.def(
      "same_right_ideal",
      [](const std::string& a, const std::string& b) {
        return right_ideal_label(parse_icosian(a)) == right_ideal_label(parse_icosian(b));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "rotation_report",
      [](const std::string& q, bool improper) { return to_py(rotation_report(parse_icosian(q), orientation(improper))); },
      py::arg("q"), py::arg("improper") = false);

  m.def(
      "enumerate_shell",
      [](std::uint64_t n, bool csls, bool members, unsigned threads, std::uint64_t ic, std::uint64_t cc) {
        EnumerationOptions o = options(threads, ic, cc);
        o.compute_csls = csls;
        EnumerationShell shell;
        {
          py::gil_scoped_release release;
          shell = enumerate_shell(n, o);
        }
        return to_py(to_json(shell, members));
      },
      py::arg("m"), py::arg("csls") = true, py::arg("members") = false, py::arg("threads") = 1,
      py::arg("ideal_ceiling") = 50, py::arg("csl_ceiling") = 20);

  m.def("zeta", &zeta, py::arg("s"));
  m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("a"));
  m.def("l_chi", &l_chi, py::arg("s"));
  m.def("dedekind_zeta_k", &dedekind_zeta_k, py::arg("s"));
  m.def("zeta_form", &zeta_form, py::arg("s"));
  m.def("euler_factor", &euler_factor, py::arg("p"), py::arg("s"));
  m.def("euler_product", &euler_product, py::arg("s"), py::arg("pmax"));
  m.def("dirichlet_partial_sum", &dirichlet_partial_sum, py::arg("s"), py::arg("n"));
  m.def("residue", &residue);
  m.def("residue_from_special_values", &residue_from_special_values);
  m.def(
      "asymptotic_ladder",
      [](const std::vector<std::uint64_t>& xs) {
        py::list out;
        for (const auto& s : asymptotic_ladder(xs)) out.append(py::make_tuple(s.x, to_py(s.partial_sum), s.ratio));
        return out;
      },
      py::arg("xs"));
  m.def(
      "spectrum_check",
      [](std::uint64_t formula_limit, std::uint64_t enumeration_limit) {
        return spectrum_check(formula_limit, enumeration_limit).ok();
      },
      py::arg("formula_limit") = 1000, py::arg("enumeration_limit") = 20);

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t max, unsigned threads) {
        const EnumerationOptions o = options(threads, 50, 20);
        VerifyReport r;
        if (suite == "basic")
          r = verify_basic();
        else if (suite == "theorem39")
          r = verify_theorem39(max ? max : 20, o);
        else if (suite == "counting")
          r = verify_counting(max ? max : 50, o);
        else
          throw ParseError("unknown suite: " + suite);
        return to_py(r.to_json());
      },
      py::arg("suite"), py::arg("max") = 0, py::arg("threads") = 1);
}
