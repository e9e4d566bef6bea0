#pragma once

// The icosian ring I, a maximal o-order in H(K):
//   I = < (1,0,0,0), (0,1,0,0), (1,1,1,1)/2, (1-t,t,0,1)/2 >_o.

#include "a4csl/golden.hpp"
#include "a4csl/hnf.hpp"
#include "a4csl/quat.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace a4csl {

class NotPrimitiveError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotAdmissibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// o-basis b1..b4 of I.
const std::array<QuatK, 4>& icosian_basis();
/// Z-basis e0..e7 = {b1, b2, b3, b4, t b1, t b2, t b3, t b4}.
const std::array<QuatK, 8>& icosian_z_basis();

using ZVec = std::array<Int, 8>;

/// A quaternion known to lie in I, together with its o-coordinates.
class Icosian {
 public:
  Icosian() = default;
  static Icosian from_ocoords(std::array<GoldenInt, 4> c);
  static Icosian from_zcoords(const ZVec& z);
  static Icosian one() { return from_ocoords({1, 0, 0, 0}); }

  const QuatK& value() const { return value_; }
  const std::array<GoldenInt, 4>& ocoords() const { return o_; }
  ZVec zcoords() const;

  bool is_zero() const { return value_.is_zero(); }
  /// Reduced norm; totally positive for nonzero icosians.
  GoldenInt nr() const;
  GoldenInt trace() const;

  Icosian conj() const;
  Icosian twist() const;
  Icosian scaled(const GoldenInt& s) const;

  friend Icosian operator*(const Icosian& x, const Icosian& y);
  friend Icosian operator+(const Icosian& x, const Icosian& y);
  friend Icosian operator-(const Icosian& x, const Icosian& y);
  friend bool operator==(const Icosian& x, const Icosian& y) { return x.o_ == y.o_; }
  friend bool operator<(const Icosian& x, const Icosian& y) { return x.o_ < y.o_; }

 private:
  Icosian(QuatK v, std::array<GoldenInt, 4> o) : value_(std::move(v)), o_(std::move(o)) {}
  friend std::optional<Icosian> membership(const QuatK& q);

  QuatK value_;
  std::array<GoldenInt, 4> o_{};
};

/// Solves q = sum c_i b_i over K; returns the Icosian iff every c_i is in o.
std::optional<Icosian> membership(const QuatK& q);
/// Self-duality route: q in I iff tr(q conj(y)) in o for the Z-basis y of I.
bool is_member_by_duality(const QuatK& q);

/// Gram matrix tr(b_i conj(b_j)) of the o-basis.
std::array<std::array<GoldenNum, 4>, 4> icosian_trace_gram();
GoldenNum icosian_gram_determinant();

/// Canonical generator of the o-ideal spanned by the o-coordinates.
GoldenInt content(const Icosian& q);
/// Canonical generator of the o-ideal spanned by tr(q conj(y)), y in I.
GoldenInt content_by_traces(const Icosian& q);
bool is_primitive(const Icosian& q);
/// (g, p) with q = g p, g = content(q), p primitive.
std::pair<GoldenInt, Icosian> primitive_part(const Icosian& q);

/// N(nr q) is a perfect square.
bool is_admissible(const Icosian& q);
/// Valuation form: even exponent at sqrt5, equal parity on each split pair.
bool is_admissible_by_valuations(const Icosian& q);

/// Rational integer generating lcm(delta, delta') (delta admissible and
/// totally positive) and the scaling alpha with alpha^2 delta = sigma exactly.
/// alpha is supported on split primes and normalised to have positive trace.
struct NormExtension {
  GoldenInt alpha;
  Int sigma;
};
NormExtension norm_extension(const GoldenInt& delta);

struct ExtensionPair {
  Icosian q;
  GoldenInt alpha;
  Icosian q_alpha;  ///< alpha q, with nr(q_alpha) = sigma
  Int sigma;
};
/// Requires q primitive and admissible.
ExtensionPair extension(const Icosian& q);

/// z in I with tr(q conj(z)) = 1; requires q primitive.
Icosian trace_witness(const Icosian& q);
/// z in I with tr(q_alpha conj(z)) + tr(twist(conj z) twist(q_alpha)) = 1.
Icosian extended_trace_witness(const ExtensionPair& pair);

/// HNF of the right ideal q I over the Z-basis of I.
struct RightIdealLabel {
  IntMatrix hnf;
  friend bool operator==(const RightIdealLabel&, const RightIdealLabel&) = default;
  friend bool operator<(const RightIdealLabel& x, const RightIdealLabel& y) { return x.hnf < y.hnf; }
};
RightIdealLabel right_ideal_label(const Icosian& q);

/// The 120 icosians of reduced norm 1, sorted by o-coordinates.
const std::vector<Icosian>& units_mod_center();

/// Integer structure constants of I on its Z-basis.
struct ZTables {
  std::int64_t mul[8][8][8];  ///< e_i e_j = sum_k mul[i][j][k] e_k
  std::int64_t twist[8][8];   ///< twist(e_j) = sum_i twist[i][j] e_i
  std::int64_t conj[8][8];
  /// nr(sum x_k e_k) = A(x) + B(x) t, A(x) = sum_{k<=l} nr_a[k][l] x_k x_l.
  std::int64_t nr_a[8][8];
  std::int64_t nr_b[8][8];
};
const ZTables& z_tables();

/// 8x8 matrix of y -> q y on Z-coordinates.
IntMatrix left_mult_matrix(const ZVec& q);
/// 8x8 matrix of y -> y q on Z-coordinates.
IntMatrix right_mult_matrix(const ZVec& q);

}  // namespace a4csl
