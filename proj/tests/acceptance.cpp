// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "a4csl/counting.hpp"
#include "a4csl/io.hpp"
#include "a4csl/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace a4csl;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string join(const std::vector<std::optional<Int>>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << (v[i] ? v[i]->str() : "-");
  os << ']';
  return os.str();
}

std::vector<std::optional<Int>> expect(std::initializer_list<long> xs) {
  std::vector<std::optional<Int>> out;
  for (long x : xs) out.emplace_back(Int(x));
  return out;
}

EnumerationOptions options() {
  EnumerationOptions o;
  o.threads = std::max(1u, std::thread::hardware_concurrency());
  return o;
}

std::string fails(const VerifyReport& r) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& c : r.checks)
    if (!c.passed && bad++ == 0) first = c.name + " " + c.detail;
  std::ostringstream os;
  os << r.checks.size() - bad << "/" << r.checks.size() << " checks";
  if (bad) os << ", first failure " << first;
  return os.str();
}

Outcome series_formula() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = dirichlet_coeffs(11, CoeffKind::rot);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = c.values == expect({1, 5, 10, 20, 30, 50, 50, 80, 90, 150, 144}) && secs < 1;
  return {ok, join(c.values)};
}

Outcome series_oracle() {
  EnumerationOptions o = options();
  o.compute_csls = false;
  o.check_labels = false;
  std::vector<std::uint64_t> bad;
  for (std::uint64_t m = 1; m <= 50; ++m)
    if (Int(enumerate_shell(m, o).ideal_count()) != f_rot(m)) bad.push_back(m);
  std::ostringstream os;
  os << "m <= 50, " << bad.size() << " mismatches";
  for (auto m : bad) os << ' ' << m;
  return {bad.empty(), os.str()};
}

Outcome csl_counts() {
  EnumerationOptions o = options();
  const auto brute = dirichlet_coeffs(11, CoeffKind::brute, o);
  const bool series_ok = brute.values == expect({1, 5, 10, 20, 6, 50, 50, 80, 90, 30, 144});
  o.ideal_ceiling = 121;
  o.csl_ceiling = 121;
  o.check_labels = false;
  const auto shell = enumerate_shell(121, o);
  const Int f121 = shell.csls.size();
  const Int rot121 = f_rot(121);
  std::ostringstream os;
  os << join(brute.values) << "; f(121) = " << f121 << ", f_rot(121) = " << rot121 << ", ideals "
     << shell.ideal_count();
  return {series_ok && f121 != rot121 && Int(shell.ideal_count()) == rot121, os.str()};
}

Outcome worked_example() {
  const Icosian r = parse_icosian("(t,2t,0,0)");
  const Icosian s = parse_icosian("(t^2,t,t,1)");
  const Sublattice4 cr = csl(r);
  const Sublattice4 cs = csl(s);
  const Sublattice4 given = sublattice_from_quats(
      {parse_quat("(1,2,0,0)"), parse_quat("(2,-1,0,0)"), parse_quat("1/2(3,1,1,1)"), parse_quat("1/2(-2,1,t-1,-t)")});
  const bool distinct_ideals = !(right_ideal_label(r) == right_ideal_label(s));
  std::ostringstream os;
  os << "det " << cr.index << ", same HNF " << (cr == cs) << ", matches given basis " << (cr == given)
     << ", labels differ " << distinct_ideals;
  return {cr == cs && cr.index == 5 && cr == given && distinct_ideals, os.str()};
}

Outcome oracle_equality(std::uint64_t max) {
  const VerifyReport r = verify_theorem39(max, options());
  bool ok = true;
  std::size_t n = 0;
  for (const auto& c : r.checks) {
    if (c.name.rfind("csl_equals_intersection", 0) == 0) {
      ok = ok && c.passed;
      ++n;
    }
  }
  return {ok && n == max, fails(r)};
}

Outcome index_formula(std::uint64_t max) {
  EnumerationOptions o = options();
  o.compute_csls = false;
  o.check_labels = false;
  std::size_t total = 0, bad = 0;
  for (std::uint64_t m = 1; m <= max; ++m)
    for (const auto& q : enumerate_shell(m, o).representatives) {
      ++total;
      const GoldenInt n = q.nr();
      const Int s = sigma(q);
      bad += !(csl(q).index == s && s * s == lcm(n, n.conj()).abs_norm());
    }
  std::ostringstream os;
  os << total - bad << "/" << total << " generators with sigma <= " << max;
  return {bad == 0 && total > 0, os.str()};
}

Outcome numeric_targets() {
  const double res = residue();
  const double ratio = asymptotic_ladder({10000}).front().ratio;
  std::ostringstream os;
  os << std::setprecision(10) << "residue " << res << ", constant " << res / 3 << ", ratio at 1e4 " << ratio;
  const bool ok = std::abs(res - 1.258124) < 5e-7 && std::abs(res / 3 - 0.419375) < 5e-7 &&
                  std::abs(ratio - res) < 0.03 * res;
  return {ok, os.str()};
}

Outcome structural() {
  const VerifyReport r = verify_basic(1000);
  return {r.ok(), fails(r)};
}

Outcome spectrum() {
  const SpectrumReport r = spectrum_check(1000, 20, options());
  std::ostringstream os;
  os << "formula gaps " << r.formula_gaps.size() << " (m <= 1000), empty shells " << r.enumeration_gaps.size()
     << " (m <= 20)";
  return {r.ok(), os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"formula coefficients up to 11", series_formula},
      {"enumerated ideal counts equal the formula for m <= 50", series_oracle},
      {"CSL counts up to 11, and f(121) differs from f_rot(121)", csl_counts},
      {"two generators of one index-5 CSL", worked_example},
      {"CSL equals the intersection oracle for sigma <= 20", [] { return oracle_equality(20); }},
      {"det csl = sigma and sigma^2 = N(lcm) for sigma <= 20", [] { return index_formula(20); }},
      {"residue, asymptotic constant, partial-sum ratio", numeric_targets},
      {"structural suites", structural},
      {"every index occurs", spectrum},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << o.detail << " [" << std::fixed << std::setprecision(2) << secs << "s]" << std::defaultfloat
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
