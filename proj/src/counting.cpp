#include "a4csl/counting.hpp"

#include "norm_search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace a4csl {

namespace {

Int ipow(const Int& b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

using UnitMatrix = std::array<std::array<std::int64_t, 8>, 8>;

const std::vector<UnitMatrix>& right_unit_matrices() {
  static const std::vector<UnitMatrix> mats = [] {
    std::vector<UnitMatrix> out;
    for (const auto& e : units_mod_center()) {
      const IntMatrix m = right_mult_matrix(e.zcoords());
      UnitMatrix u{};
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) u[i][j] = m(i, j).convert_to<std::int64_t>();
      out.push_back(u);
    }
    return out;
  }();
  return mats;
}

ZVec widen(const detail::SmallZ& z) {
  ZVec out;
  for (std::size_t i = 0; i < 8; ++i) out[i] = z[i];
  return out;
}

// Representatives of the orbits of x -> x eps, eps in the 120 norm-one units.
std::vector<detail::SmallZ> orbit_representatives(const std::vector<detail::SmallZ>& sorted) {
  const auto& units = right_unit_matrices();
  std::vector<char> seen(sorted.size(), 0);
  std::vector<detail::SmallZ> reps;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(sorted[i]);
    std::size_t marked = 0;
    for (const auto& u : units) {
      detail::SmallZ w{};
      for (std::size_t r = 0; r < 8; ++r) {
        std::int64_t acc = 0;
        for (std::size_t c = 0; c < 8; ++c) acc += u[r][c] * sorted[i][c];
        w[r] = static_cast<std::int32_t>(acc);
      }
      const auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
      if (it == sorted.end() || *it != w) throw DomainError("norm search missed a unit multiple");
      const auto idx = static_cast<std::size_t>(it - sorted.begin());
      if (!seen[idx]) {
        seen[idx] = 1;
        ++marked;
      }
    }
    if (marked != units.size()) throw DomainError("unit action on a shell is not free");
  }
  return reps;
}

}  // namespace

// --- formulas ---------------------------------------------------------------

Int f_rot_prime_power(std::uint64_t p, int r) {
  if (r < 1) throw DomainError("f_rot_prime_power: exponent must be positive");
  if (!is_rational_prime(p)) throw DomainError("f_rot_prime_power: not a prime");
  const Int P(p);
  if (p == 5) return 6 * ipow(P, 2 * r - 1);
  const auto c = p % 5;
  if (c == 1 || c == 4) {
    const Int num = (P + 1) * ipow(P, r - 1) * (ipow(P, r + 1) + ipow(P, r - 1) - 2);
    if (num % (P - 1) != 0) throw DomainError("f_rot_prime_power: inexact division");
    return num / (P - 1);
  }
  return ipow(P, 2 * r) + ipow(P, 2 * r - 2);
}

Int f_rot(std::uint64_t m) {
  if (m == 0) throw DomainError("f_rot(0)");
  Int v = 1;
  for (const auto& [p, e] : factor_integer(m)) v *= f_rot_prime_power(p, e);
  return v;
}

std::optional<Int> f_known(std::uint64_t m) {
  if (m == 0) throw DomainError("f_known(0)");
  Int v = 1;
  for (const auto& [p, e] : factor_integer(m)) {
    const auto c = p % 5;
    if (p == 5)
      v *= f_rot_prime_power(p, e) / 5;
    else if (c == 2 || c == 3)
      v *= f_rot_prime_power(p, e);
    else if (e == 1)
      v *= f_rot_prime_power(p, 1);
    else
      return std::nullopt;
  }
  return v;
}

const char* to_string(CoeffKind k) {
  switch (k) {
    case CoeffKind::rot: return "rot";
    case CoeffKind::known: return "known";
    case CoeffKind::brute: return "brute";
    case CoeffKind::brute_rot: return "brute-rot";
  }
  return "?";
}

std::optional<CoeffKind> parse_coeff_kind(const std::string& s) {
  if (s == "rot") return CoeffKind::rot;
  if (s == "known") return CoeffKind::known;
  if (s == "brute") return CoeffKind::brute;
  if (s == "brute-rot") return CoeffKind::brute_rot;
  return std::nullopt;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> DirichletCoeffs::multiplicativity_failures() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const std::uint64_t n = size();
  for (std::uint64_t a = 2; a * 2 <= n; ++a)
    for (std::uint64_t b = a + 1; a * b <= n; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto &x = (*this)(a), &y = (*this)(b), &z = (*this)(a * b);
      if (x && y && z && *x * *y != *z) out.emplace_back(a, b);
    }
  return out;
}

DirichletCoeffs dirichlet_coeffs(std::uint64_t n, CoeffKind kind, const EnumerationOptions& opts) {
  if (n == 0) throw DomainError("dirichlet_coeffs: empty range");
  DirichletCoeffs d;
  d.kind = kind;
  d.values.reserve(n);
  for (std::uint64_t m = 1; m <= n; ++m) {
    switch (kind) {
      case CoeffKind::rot: d.values.emplace_back(f_rot(m)); break;
      case CoeffKind::known: d.values.push_back(f_known(m)); break;
      case CoeffKind::brute: {
        EnumerationOptions o = opts;
        o.compute_csls = true;
        d.values.emplace_back(Int(enumerate_shell(m, o).csls.size()));
        break;
      }
      case CoeffKind::brute_rot: {
        EnumerationOptions o = opts;
        o.compute_csls = false;
        d.values.emplace_back(Int(enumerate_shell(m, o).ideal_count()));
        break;
      }
    }
  }
  return d;
}

// --- enumeration --------------------------------------------------------------

std::vector<GoldenInt> candidate_norms(std::uint64_t m) {
  if (m == 0) throw DomainError("candidate_norms(0)");
  std::vector<GoldenInt> acc{GoldenInt(1)};
  for (const auto& [p, e] : factor_integer(m)) {
    const PrimeSplitting s = split_prime(p);
    std::vector<GoldenInt> local;
    if (s.cls == PrimeClass::split) {
      for (int a = 0; a <= e; ++a)
        for (int b = 0; b <= e; ++b) {
          if (std::max(a, b) != e || (a - b) % 2 != 0) continue;
          GoldenInt x = 1;
          for (int i = 0; i < a; ++i) x *= s.primes[0];
          for (int i = 0; i < b; ++i) x *= s.primes[1];
          local.push_back(x);
        }
    } else {
      local.push_back(GoldenInt(static_cast<long long>(ipow(Int(p), e).convert_to<long long>())));
    }
    std::vector<GoldenInt> next;
    for (const auto& x : acc)
      for (const auto& y : local) next.push_back(x * y);
    acc = std::move(next);
  }
  for (auto& x : acc) x = canonical_associate(x);
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

std::vector<ZVec> icosians_of_norm(const GoldenInt& delta, bool primitive_only, unsigned threads) {
  const auto found = detail::search_norm(delta, primitive_only, threads);
  std::vector<ZVec> out;
  out.reserve(found.size());
  for (const auto& z : found) out.push_back(widen(z));
  return out;
}

EnumerationShell enumerate_shell(std::uint64_t m, const EnumerationOptions& opts) {
  if (m == 0) throw DomainError("enumerate_shell(0)");
  if (m > opts.ideal_ceiling)
    throw CeilingExceeded("index " + std::to_string(m) + " exceeds the ideal ceiling " +
                          std::to_string(opts.ideal_ceiling));
  if (opts.compute_csls && m > opts.csl_ceiling)
    throw CeilingExceeded("index " + std::to_string(m) + " exceeds the CSL ceiling " +
                          std::to_string(opts.csl_ceiling));

  EnumerationShell shell;
  shell.m = m;
  std::set<Sublattice4> csls;
  for (const GoldenInt& delta : candidate_norms(m)) {
    const NormExtension ext = norm_extension(delta);
    if (ext.sigma != m) throw DomainError("candidate norm " + delta.to_string() + " has the wrong index");
    const auto vecs = detail::search_norm(delta, true, std::max(1u, opts.threads));
    const auto reps = orbit_representatives(vecs);
    shell.parts.push_back({delta, vecs.size(), reps.size()});
    for (const auto& z : reps) {
      Icosian q = Icosian::from_zcoords(widen(z));
      if (opts.compute_csls) csls.insert(lattice_of_ideal(q.scaled(ext.alpha)));
      shell.representatives.push_back(std::move(q));
    }
  }
  std::sort(shell.representatives.begin(), shell.representatives.end());

  if (opts.check_labels) {
    shell.ideals.reserve(shell.representatives.size());
    for (const auto& q : shell.representatives) shell.ideals.push_back(right_ideal_label(q));
    std::sort(shell.ideals.begin(), shell.ideals.end());
    if (std::adjacent_find(shell.ideals.begin(), shell.ideals.end()) != shell.ideals.end())
      throw DomainError("two orbit representatives generate the same right ideal");
  }
  if (opts.compute_csls) {
    shell.csls.assign(csls.begin(), csls.end());
    shell.csls_computed = true;
  }
  return shell;
}

// --- analytic side --------------------------------------------------------------

double euler_factor(std::uint64_t p, double s) {
  if (!(s > 3)) throw DomainError("euler_factor needs s > 3");
  if (!is_rational_prime(p)) throw DomainError("euler_factor: not a prime");
  const double P = static_cast<double>(p);
  const double x = std::pow(P, -s);
  if (p == 5) return (1 + 5 * x) / (1 - 25 * x);
  const auto c = p % 5;
  if (c == 1 || c == 4) return (1 + x) * (1 + P * x) / ((1 - P * x) * (1 - P * P * x));
  return (1 + x) / (1 - P * P * x);
}

std::vector<Int> euler_factor_series(std::uint64_t p, int max_r) {
  if (!is_rational_prime(p)) throw DomainError("euler_factor_series: not a prime");
  const Int P(p);
  std::vector<Int> num{1};
  std::vector<Int> poles;
  const auto c = p % 5;
  if (p == 5) {
    num = {1, 5};
    poles = {25};
  } else if (c == 1 || c == 4) {
    num = {1, P + 1, P};
    poles = {P, P * P};
  } else {
    num = {1, 1};
    poles = {P * P};
  }
  std::vector<Int> a(static_cast<std::size_t>(max_r) + 1, 0);
  for (std::size_t i = 0; i < num.size() && i < a.size(); ++i) a[i] = num[i];
  for (const Int& pole : poles)
    for (std::size_t k = 1; k < a.size(); ++k) a[k] += pole * a[k - 1];
  return a;
}

double euler_product(double s, std::uint64_t pmax) {
  double v = 1;
  for (const auto p : primes_up_to(pmax)) v *= euler_factor(p, s);
  return v;
}

double dirichlet_partial_sum(double s, std::uint64_t n) {
  double v = 0;
  for (std::uint64_t m = 1; m <= n; ++m) v += f_rot(m).convert_to<double>() * std::pow(static_cast<double>(m), -s);
  return v;
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1)) throw DomainError("hurwitz_zeta needs s > 1");
  if (!(a > 0)) throw DomainError("hurwitz_zeta needs a > 0");
  // Euler-Maclaurin after N direct terms.
  static constexpr double bernoulli[] = {1.0 / 6,          -1.0 / 30,    1.0 / 42,        -1.0 / 30,
                                         5.0 / 66,         -691.0 / 2730, 7.0 / 6,        -3617.0 / 510,
                                         43867.0 / 798,    -174611.0 / 330};
  constexpr int n = 30;
  double sum = 0;
  for (int k = 0; k < n; ++k) sum += std::pow(k + a, -s);
  const double x = n + a;
  sum += std::pow(x, 1 - s) / (s - 1) + std::pow(x, -s) / 2;
  double rising = s;        // s (s+1) ... (s+2k-2)
  double fact = 2;          // (2k)!
  double xp = std::pow(x, -s - 1);
  for (int k = 1; k <= 10; ++k) {
    sum += bernoulli[k - 1] / fact * rising * xp;
    rising *= (s + 2 * k - 1) * (s + 2 * k);
    fact *= (2 * k + 1) * (2 * k + 2);
    xp /= x * x;
  }
  return sum;
}

double zeta(double s) { return hurwitz_zeta(s, 1.0); }

int chi5(std::uint64_t n) {
  switch (n % 5) {
    case 1:
    case 4: return 1;
    case 2:
    case 3: return -1;
    default: return 0;
  }
}

double l_chi(double s) {
  double v = 0;
  for (int a = 1; a <= 4; ++a) v += chi5(static_cast<std::uint64_t>(a)) * hurwitz_zeta(s, a / 5.0);
  return std::pow(5.0, -s) * v;
}

double dedekind_zeta_k(double s) { return zeta(s) * l_chi(s); }

double zeta_form(double s) {
  if (!(s > 3)) throw DomainError("zeta_form needs s > 3");
  return dedekind_zeta_k(s - 1) / (1 + std::pow(5.0, -s)) * zeta(s) * zeta(s - 2) / (zeta(2 * s) * zeta(2 * s - 2));
}

double residue() {
  const double pi = std::numbers::pi;
  return 450 * std::sqrt(5.0) / std::pow(pi, 6) * zeta(3);
}

double residue_from_special_values() {
  return 125.0 / 126.0 * dedekind_zeta_k(2) * zeta(3) / (zeta(4) * zeta(6));
}

std::vector<LadderStep> asymptotic_ladder(const std::vector<std::uint64_t>& xs) {
  std::vector<std::uint64_t> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  std::vector<LadderStep> out;
  Int acc = 0;
  std::uint64_t m = 0;
  for (const auto x : sorted) {
    while (m < x) acc += f_rot(++m);
    const double xd = static_cast<double>(x);
    out.push_back({x, acc, acc.convert_to<double>() / (xd * xd * xd / 3)});
  }
  return out;
}

SpectrumReport spectrum_check(std::uint64_t formula_limit, std::uint64_t enumeration_limit,
                              const EnumerationOptions& opts) {
  SpectrumReport r;
  r.formula_limit = formula_limit;
  r.enumeration_limit = enumeration_limit;
  for (std::uint64_t m = 1; m <= formula_limit; ++m)
    if (f_rot(m) <= 0) r.formula_gaps.push_back(m);
  EnumerationOptions o = opts;
  o.compute_csls = false;
  o.check_labels = false;
  for (std::uint64_t m = 1; m <= enumeration_limit; ++m)
    if (enumerate_shell(m, o).representatives.empty()) r.enumeration_gaps.push_back(m);
  return r;
}

}  // namespace a4csl
