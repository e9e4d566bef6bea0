#include "a4csl/a4lattice.hpp"

#include <algorithm>
#include <set>

namespace a4csl {

namespace {

// (a, b, c, c') with a, b in Q, c = u + w t  ->  (a, b, u, w).
std::optional<LCoords> ambient_rational(const QuatK& x) {
  if (x.twist() != x) return std::nullopt;
  const auto a = x[0].to_rational();
  const auto b = x[1].to_rational();
  if (!a || !b) return std::nullopt;
  const auto [u, w] = x[2].rational_parts();
  return LCoords{*a, *b, u, w};
}

const RatMatrix& basis_inverse() {
  static const RatMatrix inv = [] {
    RatMatrix v(4, 4);
    const auto& basis = a4_basis();
    for (std::size_t j = 0; j < 4; ++j) {
      const auto c = ambient_rational(basis[j]);
      if (!c) throw DomainError("A4 basis vector is not twist-invariant");
      for (std::size_t i = 0; i < 4; ++i) v(i, j) = (*c)[i];
    }
    return inverse(v);
  }();
  return inv;
}

std::optional<LVec> integral(const LCoords& c) {
  LVec z;
  for (std::size_t i = 0; i < 4; ++i) {
    if (denominator(c[i]) != 1) return std::nullopt;
    z[i] = numerator(c[i]);
  }
  return z;
}

LVec require_in_lattice(const QuatK& x) {
  const auto c = lattice_coords(x);
  if (!c) throw DomainError("element is not in the rational span of L: " + x.to_string());
  const auto z = integral(*c);
  if (!z) throw DomainError("element is not in L: " + x.to_string());
  return *z;
}

Int require_denominator(const Icosian& q) {
  if (q.is_zero() || !is_primitive(q)) throw NotPrimitiveError("rotation generator must be primitive");
  const auto d = exact_isqrt(q.nr().abs_norm());
  if (!d) throw NotAdmissibleError("N(nr q) is not a perfect square");
  return *d;
}

}  // namespace

const std::array<QuatK, 4>& a4_basis() {
  static const std::array<QuatK, 4> v = [] {
    const GoldenNum half(1, 2);
    const GoldenNum t = GoldenNum::tau();
    return std::array<QuatK, 4>{QuatK(1, 0, 0, 0), QuatK(-half, half, half, half), QuatK(0, -1, 0, 0),
                                QuatK(0, half, half * (t - GoldenNum(1)), -half * t)};
  }();
  return v;
}

QuatK A4Vector::value() const {
  return from_lattice_coords({Rational(zcoords[0]), Rational(zcoords[1]), Rational(zcoords[2]), Rational(zcoords[3])});
}

std::optional<LCoords> lattice_coords(const QuatK& x) {
  const auto amb = ambient_rational(x);
  if (!amb) return std::nullopt;
  const RatMatrix& inv = basis_inverse();
  LCoords c;
  for (std::size_t i = 0; i < 4; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += inv(i, j) * (*amb)[j];
    c[i] = s;
  }
  return c;
}

QuatK from_lattice_coords(const LCoords& c) {
  QuatK x;
  const auto& v = a4_basis();
  for (std::size_t i = 0; i < 4; ++i)
    if (c[i] != 0) x += GoldenNum::from_rational_parts(c[i], 0) * v[i];
  return x;
}

std::optional<A4Vector> in_lattice(const QuatK& x) {
  if (x.twist() != x || !membership(x)) return std::nullopt;
  return A4Vector{require_in_lattice(x)};
}

std::optional<A4Vector> in_lattice_by_solve(const QuatK& x) {
  const auto c = lattice_coords(x);
  if (!c) return std::nullopt;
  const auto z = integral(*c);
  if (!z) return std::nullopt;
  return A4Vector{*z};
}

std::vector<QuatK> Sublattice4::ambient_basis() const {
  std::vector<QuatK> out;
  for (std::size_t j = 0; j < 4; ++j) out.push_back(A4Vector{{hnf(0, j), hnf(1, j), hnf(2, j), hnf(3, j)}}.value());
  return out;
}

Sublattice4 sublattice_from_generators(const IntMatrix& gens) {
  Sublattice4 s;
  s.hnf = hnf_columns(gens);
  s.index = triangular_determinant(s.hnf);
  return s;
}

Sublattice4 sublattice_from_quats(const std::vector<QuatK>& gens) {
  IntMatrix m(4, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const LVec z = require_in_lattice(gens[j]);
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = z[i];
  }
  return sublattice_from_generators(m);
}

const IntMatrix& phi_plus_matrix() {
  static const IntMatrix m = [] {
    IntMatrix p(4, 8);
    const auto& e = icosian_z_basis();
    for (std::size_t k = 0; k < 8; ++k) {
      const LVec z = require_in_lattice(phi_plus(e[k]));
      for (std::size_t i = 0; i < 4; ++i) p(i, k) = z[i];
    }
    return p;
  }();
  return m;
}

Sublattice4 phi_plus_lattice() {
  std::vector<QuatK> gens;
  for (const auto& e : icosian_z_basis()) gens.push_back(phi_plus(e));
  return sublattice_from_quats(gens);
}

Sublattice4 ssl(const Icosian& q) {
  if (q.is_zero()) throw DomainError("ssl of zero");
  const QuatK qt = q.value().twist();
  std::vector<QuatK> gens;
  for (const auto& v : a4_basis()) gens.push_back(q.value() * v * qt);
  return sublattice_from_quats(gens);
}

Sublattice4 lattice_of_ideal(const Icosian& q) {
  if (q.is_zero()) throw DomainError("lattice_of_ideal of zero");
  return sublattice_from_generators(phi_plus_matrix() * left_mult_matrix(q.zcoords()));
}

Sublattice4 csl(const Icosian& q) { return lattice_of_ideal(extension(q).q_alpha); }

Sublattice4 csl_by_intersection(const Icosian& q) {
  const Int d = require_denominator(q);
  const Sublattice4 s = ssl(q);
  const RationalLattice rotated{s.hnf, d};
  const RationalLattice whole{IntMatrix::identity(4), 1};
  const RationalLattice meet = intersect(whole, rotated);
  if (meet.scale != 1) throw DomainError("intersection with L is not integral");
  return sublattice_from_generators(meet.hnf);
}

Int sigma(const Icosian& q) { return extension(q).sigma; }

Int denominator(const Icosian& q) { return require_denominator(q); }

bool is_coincidence(const Icosian& q) {
  if (q.is_zero()) throw DomainError("is_coincidence of zero");
  return is_admissible(primitive_part(q).second);
}

CoincidenceRotation make_rotation(const Icosian& q, Orientation o) {
  if (q.is_zero()) throw DomainError("rotation from zero");
  Icosian p = primitive_part(q).second;
  const Int d = require_denominator(p);
  Int s = extension(p).sigma;
  return {std::move(p), o, std::move(s), d};
}

CoincidenceRotation compose(const CoincidenceRotation& r1, const CoincidenceRotation& r2) {
  // R_q(conj(R_p(x))) = R_{q conj(twist p)}(conj x).
  const bool imp1 = r1.orientation == Orientation::improper;
  const bool imp2 = r2.orientation == Orientation::improper;
  const Icosian rhs = imp1 ? r2.q.twist().conj() : r2.q;
  const Orientation o = (imp1 != imp2) ? Orientation::improper : Orientation::proper;
  return make_rotation(r1.q * rhs, o);
}

CoincidenceRotation inverse(const CoincidenceRotation& r) {
  if (r.orientation == Orientation::proper) return make_rotation(r.q.conj(), Orientation::proper);
  return make_rotation(r.q.twist(), Orientation::improper);
}

RatMatrix conjugation_matrix() {
  RatMatrix m(4, 4);
  const auto& v = a4_basis();
  for (std::size_t j = 0; j < 4; ++j) {
    const LVec z = require_in_lattice(v[j].conj());
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = Rational(z[i]);
  }
  return m;
}

RatMatrix rotation_matrix(const CoincidenceRotation& r) {
  RatMatrix m(4, 4);
  const auto& v = a4_basis();
  const QuatK qt = r.q.value().twist();
  const GoldenNum scale = GoldenNum(GoldenInt(1), r.denominator);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto c = lattice_coords(scale * (r.q.value() * v[j] * qt));
    if (!c) throw DomainError("rotated vector left the rational span of L");
    for (std::size_t i = 0; i < 4; ++i) m(i, j) = (*c)[i];
  }
  if (r.orientation == Orientation::improper) m = m * conjugation_matrix();
  return m;
}

std::vector<std::vector<double>> to_double(const RatMatrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).convert_to<double>();
  return out;
}

RatMatrix lattice_gram() {
  RatMatrix g(4, 4);
  const auto& v = a4_basis();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto x = trace_form(v[i], v[j]).to_rational();
      if (!x) throw DomainError("A4 Gram entry is irrational");
      g(i, j) = *x;
    }
  return g;
}

const std::vector<RatMatrix>& symmetry_rotations() {
  static const std::vector<RatMatrix> rots = [] {
    std::set<RatMatrix> s;
    for (const auto& e : units_mod_center()) {
      RatMatrix m = rotation_matrix(make_rotation(e));
      RatMatrix neg = m;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) neg(i, j) = -neg(i, j);
      s.insert(std::move(m));
      s.insert(std::move(neg));
    }
    return std::vector<RatMatrix>(s.begin(), s.end());
  }();
  return rots;
}

}  // namespace a4csl
