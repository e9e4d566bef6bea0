#pragma once

// Coincidence counting for A4: the multiplicative function f_rot (rotations
// of index m, in units of the 120 symmetries), the CSL count f, their
// Dirichlet series, and a brute-force enumerator over icosians.

#include "a4csl/a4lattice.hpp"
#include "a4csl/golden.hpp"
#include "a4csl/icosian.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace a4csl {

/// An enumeration request beyond the configured index ceiling.
class CeilingExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

Int f_rot_prime_power(std::uint64_t p, int r);
Int f_rot(std::uint64_t m);
/// f(m) where it is settled: any power of 5 or of p = +-2 (5), and first
/// powers of p = +-1 (5), extended multiplicatively. Absent otherwise.
std::optional<Int> f_known(std::uint64_t m);

/// rot: formula; known: settled values of f; brute: CSL counts by
/// enumeration; brute_rot: right-ideal counts by enumeration.
enum class CoeffKind { rot, known, brute, brute_rot };
const char* to_string(CoeffKind k);
std::optional<CoeffKind> parse_coeff_kind(const std::string& s);

struct DirichletCoeffs {
  CoeffKind kind = CoeffKind::rot;
  /// values[m - 1] is the coefficient of m^-s; absent when unknown.
  std::vector<std::optional<Int>> values;

  std::size_t size() const { return values.size(); }
  const std::optional<Int>& operator()(std::uint64_t m) const { return values.at(m - 1); }
  /// Pairs of coprime (m, n) with mn <= size() and all three values present
  /// where the product rule fails.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> multiplicativity_failures() const;
};

struct EnumerationOptions {
  unsigned threads = 1;
  std::uint64_t ideal_ceiling = 50;
  std::uint64_t csl_ceiling = 20;
  bool compute_csls = true;
  /// Recompute the 8x8 right-ideal HNF of every representative and assert
  /// that they are pairwise distinct.
  bool check_labels = true;
};

DirichletCoeffs dirichlet_coeffs(std::uint64_t n, CoeffKind kind, const EnumerationOptions& opts = {});

/// Reduced norms delta (canonical associates) of primitive admissible
/// icosians with coincidence index m.
std::vector<GoldenInt> candidate_norms(std::uint64_t m);

/// Every icosian of reduced norm exactly delta, as Z-coordinates, sorted.
/// `primitive_only` drops those divisible by a non-unit of o.
std::vector<ZVec> icosians_of_norm(const GoldenInt& delta, bool primitive_only = true, unsigned threads = 1);

struct ShellPart {
  GoldenInt delta;
  std::size_t vectors = 0;   ///< primitive icosians of norm delta
  std::size_t ideals = 0;    ///< their right ideals
};

struct EnumerationShell {
  std::uint64_t m = 1;
  std::vector<ShellPart> parts;
  /// One generator per primitive right ideal, sorted by Z-coordinates.
  std::vector<Icosian> representatives;
  /// Sorted; filled when labels are checked.
  std::vector<RightIdealLabel> ideals;
  /// Distinct CSLs, sorted; empty unless computed.
  std::vector<Sublattice4> csls;
  bool csls_computed = false;

  std::size_t ideal_count() const { return representatives.size(); }
  std::size_t rotation_count() const { return 120 * representatives.size(); }
};

/// Throws CeilingExceeded above the configured ceilings and DomainError if
/// the unit orbits of the search output are incomplete.
EnumerationShell enumerate_shell(std::uint64_t m, const EnumerationOptions& opts = {});

// --- analytic side --------------------------------------------------------

/// Local factor at p of the generating function of f_rot, for s > 3.
double euler_factor(std::uint64_t p, double s);
/// f_rot(p^r) for r = 0..max_r from the power series of the local factor.
std::vector<Int> euler_factor_series(std::uint64_t p, int max_r);
/// Product of local factors over primes p <= pmax.
double euler_product(double s, std::uint64_t pmax);
/// sum_{m <= n} f_rot(m) m^-s.
double dirichlet_partial_sum(double s, std::uint64_t n);

double hurwitz_zeta(double s, double a);
double zeta(double s);
/// L(s, chi) for the character mod 5 with chi(+-1) = 1, chi(+-2) = -1.
double l_chi(double s);
int chi5(std::uint64_t n);
double dedekind_zeta_k(double s);
/// zeta_K(s-1)/(1+5^-s) * zeta(s) zeta(s-2) / (zeta(2s) zeta(2s-2)); s > 3.
double zeta_form(double s);

/// Residue at s = 3 in closed form, 450 sqrt5 zeta(3) / pi^6.
double residue();
/// The same residue from (125/126) zeta_K(2) zeta(3) / (zeta(4) zeta(6)).
double residue_from_special_values();

struct LadderStep {
  std::uint64_t x = 0;
  Int partial_sum = 0;  ///< sum_{m <= x} f_rot(m)
  double ratio = 0;     ///< partial_sum / (x^3 / 3)
};
std::vector<LadderStep> asymptotic_ladder(const std::vector<std::uint64_t>& xs);

struct SpectrumReport {
  std::uint64_t formula_limit = 0;
  std::uint64_t enumeration_limit = 0;
  std::vector<std::uint64_t> formula_gaps;      ///< m with f_rot(m) = 0
  std::vector<std::uint64_t> enumeration_gaps;  ///< m with an empty shell
  bool ok() const { return formula_gaps.empty() && enumeration_gaps.empty(); }
};
SpectrumReport spectrum_check(std::uint64_t formula_limit, std::uint64_t enumeration_limit,
                              const EnumerationOptions& opts = {});

}  // namespace a4csl
