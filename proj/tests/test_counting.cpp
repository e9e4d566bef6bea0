#include "doctest.h"
#include "support.hpp"

#include "a4csl/counting.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

using namespace testing;

namespace {

using std::numbers::pi;
const double sqrt5 = std::sqrt(5.0);
const double zeta3 = 1.2020569031595942854;

std::vector<Int> values(const DirichletCoeffs& c) {
  std::vector<Int> out;
  for (const auto& v : c.values) out.push_back(v.value());
  return out;
}

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

EnumerationOptions fast_options() {
  EnumerationOptions o;
  o.compute_csls = false;
  o.check_labels = false;
  return o;
}

}  // namespace

TEST_CASE("prime power formula") {
  CHECK(f_rot_prime_power(2, 1) == 5);
  CHECK(f_rot_prime_power(5, 1) == 30);
  CHECK(f_rot_prime_power(11, 1) == 144);
  CHECK(f_rot_prime_power(3, 2) == 90);
  CHECK(f_rot_prime_power(5, 2) == 750);
  CHECK_THROWS_AS(f_rot_prime_power(2, 0), DomainError);
  CHECK_THROWS_AS(f_rot_prime_power(6, 1), DomainError);

  // Three independent routes to the same numbers: the closed form, the
  // power series of the local factor, and the definition of each case.
  for (std::uint64_t p : {2, 3, 5, 7, 11, 19, 29, 31, 41}) {
    const auto series = euler_factor_series(p, 6);
    CHECK(series[0] == 1);
    for (int r = 1; r <= 6; ++r) {
      CHECK(series[r] == f_rot_prime_power(p, r));
      const Int P = p;
      Int direct;
      if (p == 5) {
        direct = 6 * boost::multiprecision::pow(P, 2 * r - 1);
      } else if (p % 5 == 1 || p % 5 == 4) {
        const Int num = (P + 1) * boost::multiprecision::pow(P, r - 1) *
                        (boost::multiprecision::pow(P, r + 1) + boost::multiprecision::pow(P, r - 1) - 2);
        CHECK(num % (P - 1) == 0);
        direct = num / (P - 1);
      } else {
        direct = boost::multiprecision::pow(P, 2 * r) + boost::multiprecision::pow(P, 2 * r - 2);
      }
      CHECK(direct == f_rot_prime_power(p, r));
    }
  }
}

TEST_CASE("f_rot is multiplicative") {
  CHECK(f_rot(1) == 1);
  CHECK(f_rot(6) == 50);
  CHECK(f_rot(10) == 150);
  CHECK_THROWS_AS(f_rot(0), DomainError);
  for (std::uint64_t m = 1; m <= 60; ++m)
    for (std::uint64_t n = 1; n <= 60; ++n)
      if (std::gcd(m, n) == 1) CHECK(f_rot(m * n) == f_rot(m) * f_rot(n));
}

TEST_CASE("settled values of f") {
  CHECK(f_known(5).value() == 6);
  CHECK(f_known(10).value() == 30);
  CHECK(f_known(11).value() == 144);
  CHECK(f_known(25).value() == 150);
  CHECK_FALSE(f_known(121).has_value());
  CHECK_FALSE(f_known(2 * 121).has_value());
  CHECK(f_known(8).value() == f_rot(8));
  CHECK_THROWS_AS(f_known(0), DomainError);
}

TEST_CASE("coefficient vectors") {
  const auto rot = dirichlet_coeffs(11, CoeffKind::rot);
  CHECK(values(rot) == ints({1, 5, 10, 20, 30, 50, 50, 80, 90, 150, 144}));
  CHECK(rot.multiplicativity_failures().empty());
  CHECK(values(dirichlet_coeffs(11, CoeffKind::known)) == ints({1, 5, 10, 20, 6, 50, 50, 80, 90, 30, 144}));
  CHECK(values(dirichlet_coeffs(2, CoeffKind::brute)) == ints({1, 5}));
  CHECK(values(dirichlet_coeffs(4, CoeffKind::brute_rot)) == ints({1, 5, 10, 20}));
  CHECK(parse_coeff_kind("brute-rot") == CoeffKind::brute_rot);
  CHECK_FALSE(parse_coeff_kind("nope").has_value());
}

TEST_CASE("candidate norms") {
  for (std::uint64_t m = 1; m < 121; ++m) {
    const auto norms = candidate_norms(m);
    CHECK(norms.size() == 1);
    for (const auto& d : norms) {
      CHECK(d.is_totally_positive());
      CHECK(lcm(d, d.conj()).abs_norm() == Int(m) * Int(m));
    }
  }
  CHECK(candidate_norms(121).size() == 3);
}

TEST_CASE("small shells") {
  const auto one = enumerate_shell(1);
  CHECK(one.ideal_count() == 1);
  CHECK(one.csls.size() == 1);
  CHECK(one.csls.front().hnf == IntMatrix::identity(4));

  const auto two = enumerate_shell(2);
  CHECK(two.ideal_count() == 5);
  CHECK(two.csls.size() == 5);

  const auto five = enumerate_shell(5);
  CHECK(five.ideal_count() == 30);
  CHECK(five.csls.size() == 6);
  CHECK(five.rotation_count() == 3600);

  for (const auto* shell : {&one, &two, &five})
    for (const auto& q : shell->representatives) {
      CHECK(is_coincidence(q));
      CHECK(sigma(q) == shell->m);
    }

  const auto found = icosians_of_norm(GoldenInt(2));
  CHECK(found.size() == 120 * 5);
}

TEST_CASE("ceilings") {
  EnumerationOptions o;
  o.ideal_ceiling = 10;
  o.csl_ceiling = 4;
  CHECK_THROWS_AS(enumerate_shell(11, o), CeilingExceeded);
  CHECK_THROWS_AS(enumerate_shell(5, o), CeilingExceeded);
  o.compute_csls = false;
  CHECK(enumerate_shell(5, o).ideal_count() == 30);
  CHECK_THROWS_AS(enumerate_shell(0), DomainError);
}

TEST_CASE("ideal counts match the formula") {
  const auto o = fast_options();
  for (std::uint64_t m = 1; m <= 30; ++m) {
    CAPTURE(m);
    CHECK(Int(enumerate_shell(m, o).ideal_count()) == f_rot(m));
  }
}

TEST_CASE("CSL counts") {
  EnumerationOptions o;
  o.csl_ceiling = 25;
  o.ideal_ceiling = 25;
  const auto brute = dirichlet_coeffs(20, CoeffKind::brute, o);
  const auto rot = dirichlet_coeffs(20, CoeffKind::rot);
  const auto known = dirichlet_coeffs(20, CoeffKind::known);
  for (std::uint64_t m = 1; m <= 20; ++m) {
    CAPTURE(m);
    CHECK(*brute(m) <= *rot(m));
    if (known(m)) CHECK(*brute(m) == *known(m));
  }
  CHECK(values(brute).size() == 20);
  const auto failures = brute.multiplicativity_failures();
  MESSAGE("f multiplicativity failures for m <= 20: " << failures.size());
  CHECK(failures.empty());

  const auto shell25 = enumerate_shell(25, o);
  CHECK(Int(shell25.ideal_count()) == f_rot(25));
  CHECK(Int(shell25.csls.size()) == f_rot(25) / 5);
}

TEST_CASE("each ideal accounts for exactly 120 rotations") {
  const auto& units = units_mod_center();
  const Icosian tau = Icosian::from_ocoords({GoldenInt::tau(), 0, 0, 0});
  for (std::uint64_t m = 1; m <= 10; ++m) {
    CAPTURE(m);
    const auto shell = enumerate_shell(m, fast_options());
    std::vector<Icosian> picks = {shell.representatives.front(), shell.representatives.back()};
    std::set<RatMatrix> all;
    for (const auto& q : picks) {
      std::set<RatMatrix> orbit;
      for (const auto& e : units) {
        orbit.insert(rotation_matrix(make_rotation(e * q)));
        orbit.insert(rotation_matrix(make_rotation(tau * e * q)));
      }
      CHECK(orbit.size() == 120);
      all.insert(orbit.begin(), orbit.end());
    }
    if (picks.front() == picks.back())
      CHECK(all.size() == 120);
    else
      CHECK(all.size() == 240);
  }

  // Across whole small shells the orbits are disjoint.
  for (std::uint64_t m = 2; m <= 3; ++m) {
    const auto shell = enumerate_shell(m, fast_options());
    std::set<RatMatrix> all;
    for (const auto& q : shell.representatives)
      for (const auto& e : units) {
        all.insert(rotation_matrix(make_rotation(e * q)));
        all.insert(rotation_matrix(make_rotation(tau * e * q)));
      }
    CHECK(Int(all.size()) == 120 * f_rot(m));
  }
}

TEST_CASE("special values") {
  CHECK(zeta(2) == doctest::Approx(pi * pi / 6).epsilon(1e-13));
  CHECK(zeta(4) == doctest::Approx(std::pow(pi, 4) / 90).epsilon(1e-13));
  CHECK(zeta(6) == doctest::Approx(std::pow(pi, 6) / 945).epsilon(1e-13));
  CHECK(zeta(3) == doctest::Approx(zeta3).epsilon(1e-13));
  CHECK(hurwitz_zeta(2, 0.5) == doctest::Approx(pi * pi / 2).epsilon(1e-13));
  CHECK(l_chi(2) == doctest::Approx(4 * pi * pi / (25 * sqrt5)).epsilon(1e-12));
  CHECK(dedekind_zeta_k(2) == doctest::Approx(2 * std::pow(pi, 4) / (75 * sqrt5)).epsilon(1e-12));
  CHECK(chi5(1) == 1);
  CHECK(chi5(4) == 1);
  CHECK(chi5(2) == -1);
  CHECK(chi5(3) == -1);
  CHECK(chi5(10) == 0);

  double direct = 0;
  for (std::uint64_t n = 1; n <= 200000; ++n) direct += chi5(n) / std::pow(static_cast<double>(n), 3);
  CHECK(std::abs(l_chi(3) - direct) < 1e-10);
}

TEST_CASE("Euler product and Dirichlet series") {
  for (std::uint64_t p : {2, 3, 5, 11}) {
    const double s = 4.5;
    const auto series = euler_factor_series(p, 30);
    double sum = 0;
    for (int r = 0; r <= 30; ++r) sum += series[r].convert_to<double>() * std::pow(static_cast<double>(p), -r * s);
    CHECK(euler_factor(p, s) == doctest::Approx(sum).epsilon(1e-12));
  }
  CHECK_THROWS_AS(euler_factor(2, 3.0), DomainError);
  CHECK_THROWS_AS(zeta_form(2.5), DomainError);

  const double closed = zeta_form(4);
  CHECK(std::abs(euler_product(4, 100000) - closed) < 1e-4);
  CHECK(std::abs(euler_product(4, 200) - closed) < 1e-2);
  CHECK(std::abs(dirichlet_partial_sum(6, 100000) - zeta_form(6)) < 1e-6);
}

TEST_CASE("residue and asymptotics") {
  CHECK(std::abs(residue() - 1.258124) < 5e-7);
  CHECK(std::abs(residue() / 3 - 0.419375) < 5e-7);
  CHECK(std::abs(residue() - 450 * sqrt5 * zeta3 / std::pow(pi, 6)) < 1e-12);
  CHECK(residue_from_special_values() == doctest::Approx(residue()).epsilon(1e-12));

  const auto ladder = asymptotic_ladder({10, 100, 1000, 10000});
  REQUIRE(ladder.size() == 4);
  Int running = 0;
  for (std::uint64_t m = 1; m <= 100; ++m) running += f_rot(m);
  CHECK(ladder[1].partial_sum == running);
  CHECK(std::abs(ladder[3].ratio - residue()) < 0.03 * residue());
}

TEST_CASE("spectrum") {
  const auto report = spectrum_check(1000, 20, fast_options());
  CHECK(report.ok());
  for (std::uint64_t m = 1; m <= 1000; ++m) CHECK(f_rot(m) > 0);
}
