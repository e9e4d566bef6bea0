#include "doctest.h"
#include "support.hpp"

#include <set>

using namespace testing;

namespace {

const GoldenNum half(1, 2);

Icosian icosian(const QuatK& q) { return membership(q).value(); }

const Icosian& r_example() {
  static const Icosian r = icosian(tq(t, 2 * t, 0, 0));
  return r;
}
const Icosian& s_example() {
  static const Icosian s = icosian(tq(t * t, t, t, 1));
  return s;
}

// Primitive admissible icosians with small Z-coordinates.
const std::vector<Icosian>& coincidence_sample() {
  static const std::vector<Icosian> sample = [] {
    std::vector<Icosian> out;
    ZVec z;
    for (int code = 0; code < 6561; ++code) {
      int c = code;
      for (auto& x : z) {
        x = c % 3 - 1;
        c /= 3;
      }
      const Icosian q = Icosian::from_zcoords(z);
      if (q.is_zero() || !is_primitive(q) || !is_admissible(q)) continue;
      if (extension(q).sigma <= 60) out.push_back(q);
    }
    return out;
  }();
  return sample;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (denominator(x) != 1) return false;
  return true;
}

RatMatrix scaled(const RatMatrix& m, const Rational& s) {
  RatMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) *= s;
  return r;
}

}  // namespace

TEST_CASE("basis and membership") {
  for (const auto& v : a4_basis()) {
    CHECK(v.twist() == v);
    CHECK(membership(v));
  }
  const auto v1 = in_lattice(QuatK(1, 0, 0, 0));
  REQUIRE(v1);
  CHECK(v1->zcoords == LVec{1, 0, 0, 0});
  // (1,1,1,1)/2 = v1 + v2.
  const auto b3 = in_lattice(tq(half, half, half, half));
  REQUIRE(b3);
  CHECK(b3->zcoords == LVec{1, 1, 0, 0});
  CHECK(in_lattice_by_solve(tq(half, half, half, half)) == b3);
  CHECK_FALSE(in_lattice(QuatK(0, 0, 1, 0)));
  CHECK_FALSE(in_lattice_by_solve(QuatK(0, 0, 1, 0)));

  for (int n = 0; n < 2000; ++n) {
    const QuatK x = (n % 2) ? phi_plus(random_icosian().value()) : phi_plus(random_quat(4));
    CHECK(in_lattice(x) == in_lattice_by_solve(x));
    const QuatK y = random_quat(4);
    CHECK(in_lattice(y) == in_lattice_by_solve(y));
  }
}

TEST_CASE("L is the image of phi_plus") {
  CHECK(phi_plus(icosian_basis()[0]) == QuatK(2, 0, 0, 0));
  CHECK(phi_plus_lattice().hnf == IntMatrix::identity(4));
  for (int n = 0; n < 100; ++n) {
    LVec c{uniform(-9, 9), uniform(-9, 9), uniform(-9, 9), uniform(-9, 9)};
    const QuatK x = A4Vector{c}.value();
    CHECK(phi_plus(t * x) == x);
    CHECK(membership(t * x));
  }
}

TEST_CASE("Gram matrix is the A4 Cartan matrix") {
  const RatMatrix g = lattice_gram();
  CHECK(determinant(g) == 5);
  for (std::size_t i = 0; i < 4; ++i) CHECK(g(i, i) == 2);
  // Halving the form scales the determinant by 2^-4.
  CHECK(determinant(scaled(g, Rational(1, 2))) == Rational(5, 16));
}

TEST_CASE("similar sublattices") {
  const Sublattice4 one = ssl(Icosian::one());
  CHECK(one.hnf == IntMatrix::identity(4));
  CHECK(one.index == 1);
  CHECK(ssl(Icosian::from_ocoords({1, 1, 0, 0})).index == 16);
  CHECK(ssl(r_example()).index == 625);
  CHECK_THROWS_AS(ssl(Icosian()), DomainError);
  for (int n = 0; n < 50; ++n) {
    const Icosian q = random_icosian(2);
    const Int nn = q.nr().abs_norm();
    CHECK(ssl(q).index == nn * nn);
  }
}

TEST_CASE("lattices of ideals") {
  CHECK(lattice_of_ideal(Icosian::one()).hnf == IntMatrix::identity(4));
  const Sublattice4 two = lattice_of_ideal(Icosian::from_ocoords({2, 0, 0, 0}));
  IntMatrix twice = IntMatrix::identity(4);
  for (std::size_t i = 0; i < 4; ++i) twice(i, i) = 2;
  CHECK(two.hnf == twice);
  CHECK(two.index == 16);
  CHECK(lattice_of_ideal(extension(r_example()).q_alpha).index == 5);
  for (int n = 0; n < 30; ++n) {
    const Icosian q = random_icosian(2);
    // The fast integer route agrees with phi_plus of the ideal's Z-basis.
    std::vector<QuatK> gens;
    for (const auto& e : icosian_z_basis()) gens.push_back(phi_plus(q.value() * e));
    CHECK(sublattice_from_quats(gens) == lattice_of_ideal(q));
    // Twist-stable.
    std::vector<QuatK> twisted;
    for (const auto& v : lattice_of_ideal(q).ambient_basis()) twisted.push_back(v.twist());
    CHECK(sublattice_from_quats(twisted) == lattice_of_ideal(q));
  }
}

TEST_CASE("worked example: two generators of one CSL") {
  const Sublattice4 cr = csl(r_example());
  const Sublattice4 cs = csl(s_example());
  CHECK(cr.index == 5);
  CHECK(cr == cs);
  const Sublattice4 given = sublattice_from_quats(
      {QuatK(1, 2, 0, 0), QuatK(2, -1, 0, 0), tq(GoldenNum(3) * half, half, half, half),
       tq(-1, half, (t - GoldenNum(1)) * half, -t * half)});
  CHECK(given == cr);
  CHECK(csl_by_intersection(r_example()) == cr);
  CHECK(csl_by_intersection(s_example()) == cr);
  CHECK_FALSE(right_ideal_label(r_example()) == right_ideal_label(s_example()));
  CHECK(sigma(r_example()) == 5);
  CHECK(denominator(r_example()) == 5);
  CHECK(is_coincidence(s_example()));
}

TEST_CASE("index data") {
  const Icosian one = Icosian::one();
  const Icosian q2 = Icosian::from_ocoords({1, 1, 0, 0});
  CHECK(csl(one).hnf == IntMatrix::identity(4));
  CHECK(sigma(one) == 1);
  CHECK(denominator(one) == 1);
  CHECK(sigma(q2) == 2);
  CHECK(denominator(q2) == 2);
  CHECK(is_coincidence(one));
  CHECK_THROWS_AS(is_coincidence(Icosian()), DomainError);
  CHECK_THROWS_AS(csl(Icosian::from_ocoords({2, 0, 0, 0})), NotPrimitiveError);
  CHECK_THROWS_AS(denominator(Icosian::from_ocoords({2, 0, 0, 0})), NotPrimitiveError);
  bool found_split = false;
  for (int n = 0; n < 5000 && !found_split; ++n) {
    const Icosian q = random_icosian(2);
    if (q.nr() == GoldenInt(3, 1)) {
      found_split = true;
      CHECK_FALSE(is_coincidence(q));
      CHECK_THROWS_AS(make_rotation(q), NotAdmissibleError);
    }
  }
  CHECK(found_split);
}

TEST_CASE("CSL by construction equals CSL by intersection") {
  const auto& sample = coincidence_sample();
  CHECK(sample.size() > 200);
  for (const auto& q : sample) {
    const Sublattice4 c = csl(q);
    CHECK(c == csl_by_intersection(q));
    const Int s = sigma(q);
    CHECK(c.index == s);
    const GoldenInt n = q.nr();
    CHECK(s * s == lcm(n, n.conj()).abs_norm());
    // Sigma divides the denominator, and both match the coincidence index.
    CHECK(denominator(q) % s == 0);
  }
}

TEST_CASE("CSLs are invariant under right units") {
  const auto& sample = coincidence_sample();
  for (std::size_t n = 0; n < 10; ++n) {
    const Icosian& q = sample[n * 17 % sample.size()];
    const Sublattice4 c = csl(q);
    for (const auto& e : units_mod_center()) CHECK(csl(q * e) == c);
  }
}

TEST_CASE("rotation matrices") {
  const RatMatrix g = lattice_gram();
  CHECK(rotation_matrix(make_rotation(Icosian::one())) == RatMatrix::identity(4));
  const RatMatrix c = rotation_matrix(make_rotation(Icosian::one(), Orientation::improper));
  CHECK(c == conjugation_matrix());
  CHECK(determinant(c) == -1);
  for (const auto& q : coincidence_sample()) {
    for (const Orientation o : {Orientation::proper, Orientation::improper}) {
      const CoincidenceRotation rot = make_rotation(q, o);
      const RatMatrix m = rotation_matrix(rot);
      CHECK(m.transpose() * g * m == g);
      CHECK(determinant(m) == (o == Orientation::proper ? 1 : -1));
      // den R L in L, and no proper divisor of den works.
      for (int k = 1; k <= 3; ++k) CHECK(is_integral(scaled(m, Rational(rot.denominator * k))));
      for (const auto& [p, e] : factor_integer(rot.denominator.convert_to<std::uint64_t>()))
        CHECK_FALSE(is_integral(scaled(m, Rational(rot.denominator, p))));
      // Coincidence index from the matrix: [L : L n M L].
      const RationalLattice image = rational_hnf(m);
      const RationalLattice meet = intersect(RationalLattice{IntMatrix::identity(4), 1}, image);
      CHECK(meet.scale == 1);
      CHECK(triangular_determinant(meet.hnf) == rot.sigma);
    }
  }
  const auto dbl = to_double(rotation_matrix(make_rotation(r_example())));
  CHECK(dbl.size() == 4);
}

TEST_CASE("symmetry group") {
  const auto& rots = symmetry_rotations();
  CHECK(rots.size() == 120);
  const std::set<RatMatrix> set(rots.begin(), rots.end());
  CHECK(set.count(RatMatrix::identity(4)));
  for (const auto& m : rots) {
    CHECK(determinant(m) == 1);
    CHECK(sublattice_from_generators(to_integer(m)).hnf == IntMatrix::identity(4));
    for (const auto& n : rots) CHECK(set.count(m * n));
  }
  for (const auto& e : units_mod_center()) CHECK(make_rotation(e).sigma == 1);
}

TEST_CASE("composition") {
  const auto& sample = coincidence_sample();
  const CoincidenceRotation id = make_rotation(Icosian::one());
  const CoincidenceRotation r = make_rotation(r_example());
  CHECK(rotation_matrix(compose(r, id)) == rotation_matrix(r));
  CHECK(compose(r, id).q == r.q);

  const CoincidenceRotation two = make_rotation(Icosian::from_ocoords({1, 1, 0, 0}));
  const CoincidenceRotation three = make_rotation(Icosian::from_ocoords({0, 1, 1, 0}));
  REQUIRE(two.sigma == 2);
  REQUIRE(three.sigma == 3);
  CHECK(compose(two, three).sigma == 6);

  for (std::size_t n = 0; n < 50; ++n) {
    const auto& q1 = sample[(n * 31) % sample.size()];
    const auto& q2 = sample[(n * 57 + 3) % sample.size()];
    for (const Orientation o1 : {Orientation::proper, Orientation::improper})
      for (const Orientation o2 : {Orientation::proper, Orientation::improper}) {
        const CoincidenceRotation a = make_rotation(q1, o1), b = make_rotation(q2, o2);
        const CoincidenceRotation ab = compose(a, b);
        CHECK(rotation_matrix(ab) == rotation_matrix(a) * rotation_matrix(b));
        CHECK((a.sigma * b.sigma) % ab.sigma == 0);
        if (boost::multiprecision::gcd(a.sigma, b.sigma) == 1) CHECK(ab.sigma == a.sigma * b.sigma);
        const CoincidenceRotation ai = inverse(a);
        CHECK(rotation_matrix(ai) == inverse(rotation_matrix(a)));
        CHECK(ai.sigma == a.sigma);
      }
    const CoincidenceRotation a = make_rotation(q1);
    CHECK((a.sigma * a.sigma) % compose(a, a).sigma == 0);
  }
}
