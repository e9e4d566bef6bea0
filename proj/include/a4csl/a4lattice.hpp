#pragma once

// The root lattice A4 realised inside the icosian ring as
//   L = < (1,0,0,0), (-1,1,1,1)/2, (0,-1,0,0), (0,1,t-1,-t)/2 >_Z,
// the twist-fixed part of I. Coincidence rotations are x -> q x twist(q) / |q twist(q)|.

#include "a4csl/golden.hpp"
#include "a4csl/hnf.hpp"
#include "a4csl/icosian.hpp"
#include "a4csl/quat.hpp"

#include <array>
#include <optional>
#include <vector>

namespace a4csl {

/// Z-basis v1..v4 of L.
const std::array<QuatK, 4>& a4_basis();

using LVec = std::array<Int, 4>;
using LCoords = std::array<Rational, 4>;

struct A4Vector {
  LVec zcoords{};
  QuatK value() const;
  friend bool operator==(const A4Vector&, const A4Vector&) = default;
};

/// Coordinates of x in the rational span of L; nullopt unless twist(x) = x
/// with rational first two coordinates.
std::optional<LCoords> lattice_coords(const QuatK& x);
QuatK from_lattice_coords(const LCoords& c);

/// Decides x in L as "twist-invariant and in I".
std::optional<A4Vector> in_lattice(const QuatK& x);
/// Decides x in L by solving for integer coordinates.
std::optional<A4Vector> in_lattice_by_solve(const QuatK& x);

/// A full-rank sublattice of L in canonical HNF over the basis of L.
struct Sublattice4 {
  IntMatrix hnf;
  Int index = 1;

  /// Ambient quaternions of the HNF columns.
  std::vector<QuatK> ambient_basis() const;
  friend bool operator==(const Sublattice4& x, const Sublattice4& y) { return x.hnf == y.hnf; }
  friend bool operator<(const Sublattice4& x, const Sublattice4& y) { return x.hnf < y.hnf; }
};
/// `gens` holds generators as columns in L-coordinates.
Sublattice4 sublattice_from_generators(const IntMatrix& gens);
/// Throws DomainError if some element is not in L.
Sublattice4 sublattice_from_quats(const std::vector<QuatK>& gens);

/// phi_plus applied to the Z-basis of I; equals L.
Sublattice4 phi_plus_lattice();
/// q L twist(q).
Sublattice4 ssl(const Icosian& q);
/// L(q) = phi_plus(q I).
Sublattice4 lattice_of_ideal(const Icosian& q);
/// L(q_alpha) for the extension of q; requires q primitive and admissible.
Sublattice4 csl(const Icosian& q);
/// L intersected with q L twist(q) / |q twist(q)|, by lattice duality.
Sublattice4 csl_by_intersection(const Icosian& q);

Int sigma(const Icosian& q);
/// |q twist(q)| = sqrt(N(nr q)); requires q primitive and admissible.
Int denominator(const Icosian& q);
bool is_coincidence(const Icosian& q);

enum class Orientation { proper, improper };

struct CoincidenceRotation {
  Icosian q;  ///< primitive and admissible
  Orientation orientation = Orientation::proper;
  Int sigma = 1;
  Int denominator = 1;
};
/// Extracts the primitive part of q; throws NotAdmissibleError if the
/// rotation is not a coincidence rotation.
CoincidenceRotation make_rotation(const Icosian& q, Orientation o = Orientation::proper);
CoincidenceRotation compose(const CoincidenceRotation& r1, const CoincidenceRotation& r2);
CoincidenceRotation inverse(const CoincidenceRotation& r);

/// Matrix on L-coordinates: column j holds R(v_j). Improper rotations
/// apply quaternion conjugation first.
RatMatrix rotation_matrix(const CoincidenceRotation& r);
std::vector<std::vector<double>> to_double(const RatMatrix& m);
/// Conjugation x -> conj(x) on L-coordinates.
RatMatrix conjugation_matrix();
/// Gram matrix tr(v_i conj(v_j)) (Cartan matrix of A4).
RatMatrix lattice_gram();
/// The 120 rotations of L onto itself.
const std::vector<RatMatrix>& symmetry_rotations();

/// Integer 4x8 matrix: column k holds the L-coordinates of phi_plus(e_k).
const IntMatrix& phi_plus_matrix();

}  // namespace a4csl
