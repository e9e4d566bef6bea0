#pragma once

#include "a4csl/golden.hpp"

#include <array>
#include <string>

namespace a4csl {

/// Quaternion a + i b + j c + k d over K, with i^2 = j^2 = k^2 = ijk = -1.
class QuatK {
 public:
  QuatK() = default;
  QuatK(GoldenNum a, GoldenNum b, GoldenNum c, GoldenNum d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  /// Central element (x, 0, 0, 0).
  static QuatK scalar(GoldenNum x) { return {std::move(x), 0, 0, 0}; }

  const GoldenNum& operator[](std::size_t i) const { return c_[i]; }
  const std::array<GoldenNum, 4>& coords() const { return c_; }

  bool is_zero() const;

  QuatK conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  /// Reduced norm q conj(q) = a^2 + b^2 + c^2 + d^2.
  GoldenNum nr() const;
  /// Reduced trace q + conj(q) = 2a.
  GoldenNum trace() const { return c_[0] + c_[0]; }
  /// (a', b', d', c'): Galois conjugation of every coordinate, last two swapped.
  QuatK twist() const { return {c_[0].conj(), c_[1].conj(), c_[3].conj(), c_[2].conj()}; }
  /// Galois conjugation of every coordinate, no swap.
  QuatK galois() const { return {c_[0].conj(), c_[1].conj(), c_[2].conj(), c_[3].conj()}; }
  QuatK inverse() const;

  QuatK operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
  QuatK& operator+=(const QuatK& o);
  QuatK& operator-=(const QuatK& o);
  friend QuatK operator+(QuatK x, const QuatK& y) { return x += y; }
  friend QuatK operator-(QuatK x, const QuatK& y) { return x -= y; }
  friend QuatK operator*(const QuatK& p, const QuatK& q);
  friend QuatK operator*(const GoldenNum& s, const QuatK& q);
  friend bool operator==(const QuatK& x, const QuatK& y) { return x.c_ == y.c_; }

  /// "(a, b, c, d)" with each coordinate rendered as a GoldenNum.
  std::string to_string() const;

 private:
  std::array<GoldenNum, 4> c_{};
};

inline QuatK phi_plus(const QuatK& x) { return x + x.twist(); }
inline QuatK phi_minus(const QuatK& x) { return x - x.twist(); }

/// tr(u conj(v)), the o-valued bilinear form behind duality.
GoldenNum trace_form(const QuatK& u, const QuatK& v);

}  // namespace a4csl
