#include "a4csl/verify.hpp"

#include <random>
#include <set>
#include <sstream>

namespace a4csl {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : g_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  GoldenInt golden(long r) { return {uniform(-r, r), uniform(-r, r)}; }
  GoldenNum num(long r) { return GoldenNum(golden(r), uniform(1, 4)); }
  QuatK quat(long r) { return {num(r), num(r), num(r), num(r)}; }

 private:
  std::mt19937_64 g_;
};

std::string count_detail(std::size_t bad, std::size_t total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " ok";
}

}  // namespace

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void VerifyReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

Json VerifyReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["ok"] = ok();
  Json all = Json::array();
  Json failures = Json::array();
  for (const auto& c : checks) {
    Json e = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (!c.passed) failures.push_back(e);
    all.push_back(std::move(e));
  }
  j["checks"] = all;
  j["failures"] = failures;
  return j;
}

VerifyReport verify_basic(std::size_t random_pairs) {
  VerifyReport r;
  r.suite = "basic";
  Sampler rng(0x5eed);

  {
    const GoldenNum det = icosian_gram_determinant();
    const auto g = det.to_golden_int();
    r.add("self_duality", g && g->is_unit(), "Gram determinant " + det.to_string());
  }
  {
    std::size_t bad = 0;
    for (std::size_t n = 0; n < random_pairs; ++n) {
      const QuatK x = rng.quat(6), y = rng.quat(6);
      const bool ok = x.twist().twist() == x && (x * y).twist() == y.twist() * x.twist() &&
                      (x + y).twist() == x.twist() + y.twist() && x.twist().nr() == x.nr().conj();
      bad += !ok;
    }
    r.add("twist_laws", bad == 0, count_detail(bad, random_pairs));
  }
  {
    std::size_t bad = 0;
    const std::size_t n = random_pairs / 4;
    for (std::size_t i = 0; i < n; ++i) {
      const QuatK x = rng.quat(5), y = rng.quat(5), z = rng.quat(5);
      const bool ok = (x * y) * z == x * (y * z) && (x * y).nr() == x.nr() * y.nr() &&
                      (x * y).conj() == y.conj() * x.conj() && x * (y + z) == x * y + x * z;
      bad += !ok;
    }
    r.add("ring_laws", bad == 0, count_detail(bad, n));
  }
  {
    std::size_t bad = 0, members = 0;
    const std::size_t n = random_pairs / 2;
    for (std::size_t i = 0; i < n; ++i) {
      const QuatK q(GoldenNum(rng.golden(3), 2), GoldenNum(rng.golden(3), 2), GoldenNum(rng.golden(3), 2),
                    GoldenNum(rng.golden(3), 2));
      const bool m = membership(q).has_value();
      members += m;
      bad += m != is_member_by_duality(q);
    }
    r.add("membership_routes", bad == 0, count_detail(bad, n) + ", " + std::to_string(members) + " members");
  }
  {
    bool ok = true;
    for (const auto& e : icosian_z_basis()) ok = ok && membership(e.twist()).has_value();
    r.add("twist_stability", ok);
  }
  {
    bool ok = true;
    for (const auto& v : a4_basis()) ok = ok && v.twist() == v && membership(v).has_value();
    r.add("lattice_basis_twist_fixed", ok);
  }
  r.add("phi_plus_image", phi_plus_lattice().hnf == IntMatrix::identity(4));
  {
    const Rational det = determinant(lattice_gram());
    std::ostringstream os;
    os << "det " << det;
    r.add("cartan_gram", det == 5, os.str());
  }
  {
    const auto& units = units_mod_center();
    const std::set<Icosian> set(units.begin(), units.end());
    bool ok = units.size() == 120;
    for (const auto& e : units) {
      ok = ok && e.nr() == GoldenInt(1);
      for (const auto& f : units) ok = ok && set.count(e * f);
    }
    r.add("unit_group", ok, std::to_string(units.size()) + " units");
  }
  {
    const auto& rots = symmetry_rotations();
    const std::set<RatMatrix> set(rots.begin(), rots.end());
    bool ok = rots.size() == 120 && set.count(RatMatrix::identity(4));
    for (const auto& m : rots) {
      ok = ok && determinant(m) == 1 && sublattice_from_generators(to_integer(m)).hnf == IntMatrix::identity(4);
      for (const auto& n : rots) ok = ok && set.count(m * n);
    }
    r.add("symmetry_group", ok, std::to_string(rots.size()) + " rotations");
  }
  {
    const CoincidenceRotation two = make_rotation(Icosian::from_ocoords({1, 1, 0, 0}));
    const CoincidenceRotation three = make_rotation(Icosian::from_ocoords({0, 1, 1, 0}));
    const CoincidenceRotation six = compose(two, three);
    r.add("index_coprime_product", two.sigma == 2 && three.sigma == 3 && six.sigma == 6,
          "sigma " + two.sigma.str() + " * " + three.sigma.str() + " -> " + six.sigma.str());

    EnumerationOptions o;
    o.compute_csls = false;
    o.check_labels = false;
    std::vector<CoincidenceRotation> sample;
    for (std::uint64_t m = 1; m <= 6; ++m) {
      const auto shell = enumerate_shell(m, o);
      for (std::size_t i = 0; i < shell.representatives.size(); i += 7) sample.push_back(make_rotation(shell.representatives[i]));
    }
    std::size_t bad = 0, total = 0;
    for (const auto& a : sample)
      for (const auto& b : sample) {
        const CoincidenceRotation ab = compose(a, b);
        ++total;
        bool ok = (a.sigma * b.sigma) % ab.sigma == 0;
        if (boost::multiprecision::gcd(a.sigma, b.sigma) == 1) ok = ok && ab.sigma == a.sigma * b.sigma;
        bad += !ok;
      }
    r.add("index_divisibility", bad == 0, count_detail(bad, total));
  }
  return r;
}

VerifyReport verify_theorem39(std::uint64_t max_sigma, const EnumerationOptions& opts) {
  VerifyReport r;
  r.suite = "theorem39";
  EnumerationOptions o = opts;
  o.compute_csls = false;
  o.check_labels = false;
  o.ideal_ceiling = std::max(o.ideal_ceiling, max_sigma);
  for (std::uint64_t m = 1; m <= max_sigma; ++m) {
    const auto shell = enumerate_shell(m, o);
    std::size_t bad_csl = 0, bad_index = 0;
    for (const auto& q : shell.representatives) {
      const Sublattice4 c = csl(q);
      bad_csl += !(c == csl_by_intersection(q));
      const GoldenInt n = q.nr();
      const Int s = sigma(q);
      bad_index += !(c.index == s && s == m && s * s == lcm(n, n.conj()).abs_norm());
    }
    const std::size_t total = shell.representatives.size();
    r.add("csl_equals_intersection[" + std::to_string(m) + "]", bad_csl == 0, count_detail(bad_csl, total));
    r.add("index_formula[" + std::to_string(m) + "]", bad_index == 0 && total > 0, count_detail(bad_index, total));
  }
  return r;
}

VerifyReport verify_counting(std::uint64_t max_m, const EnumerationOptions& opts) {
  VerifyReport r;
  r.suite = "counting";
  EnumerationOptions o = opts;
  o.ideal_ceiling = std::max(o.ideal_ceiling, max_m);
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    o.compute_csls = m <= o.csl_ceiling;
    const auto shell = enumerate_shell(m, o);
    const Int expected = f_rot(m);
    r.add("ideals[" + std::to_string(m) + "]", Int(shell.ideal_count()) == expected,
          std::to_string(shell.ideal_count()) + " vs " + expected.str());
    if (shell.csls_computed) {
      if (const auto known = f_known(m))
        r.add("csls[" + std::to_string(m) + "]", Int(shell.csls.size()) == *known,
              std::to_string(shell.csls.size()) + " vs " + known->str());
    }
  }
  return r;
}

}  // namespace a4csl
