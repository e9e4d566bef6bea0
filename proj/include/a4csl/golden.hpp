#pragma once

// Exact arithmetic in the golden ring o = Z[t], t = (1+sqrt5)/2, and in its
// field of fractions K = Q(sqrt5).

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace a4csl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation's mathematical precondition does not hold
/// (zero divisor, non-primitive input, non-prime argument, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element a + b t of o.
class GoldenInt {
 public:
  GoldenInt() = default;
  GoldenInt(Int a, Int b = 0) : a_(std::move(a)), b_(std::move(b)) {}
  GoldenInt(int a) : a_(a) {}
  GoldenInt(long a) : a_(a) {}
  GoldenInt(long long a) : a_(a) {}

  static GoldenInt tau() { return {0, 1}; }
  /// t^k for any integer k (t^-1 = t - 1).
  static GoldenInt unit_power(int k);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_unit() const;
  bool is_rational() const { return b_ == 0; }

  /// Algebraic conjugate: sqrt5 -> -sqrt5, i.e. t -> 1 - t.
  GoldenInt conj() const { return {a_ + b_, -b_}; }
  /// n(x) = x x' = a^2 + ab - b^2.
  Int field_norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  /// N(x) = |x x'|.
  Int abs_norm() const;
  /// Tr(x) = x + x' = 2a + b.
  Int trace() const { return 2 * a_ + b_; }

  /// Sign of the first (t -> 1.618..) and second (t -> -0.618..) real embedding.
  int sign1() const;
  int sign2() const;
  bool is_totally_positive() const { return sign1() > 0 && sign2() > 0; }
  double embed1() const;
  double embed2() const;

  GoldenInt operator-() const { return {-a_, -b_}; }
  GoldenInt& operator+=(const GoldenInt& o);
  GoldenInt& operator-=(const GoldenInt& o);
  GoldenInt& operator*=(const GoldenInt& o);
  friend GoldenInt operator+(GoldenInt x, const GoldenInt& y) { return x += y; }
  friend GoldenInt operator-(GoldenInt x, const GoldenInt& y) { return x -= y; }
  friend GoldenInt operator*(GoldenInt x, const GoldenInt& y) { return x *= y; }

  friend bool operator==(const GoldenInt& x, const GoldenInt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Lexicographic on (a, b); only used for sorting.
  friend std::strong_ordering operator<=>(const GoldenInt& x, const GoldenInt& y);

  /// Renders as "a", "b*t", "a+b*t", "a-t", ...
  std::string to_string() const;

 private:
  Int a_ = 0;
  Int b_ = 0;
};

/// x / y when y divides x in o.
std::optional<GoldenInt> exact_div(const GoldenInt& x, const GoldenInt& y);
bool divides(const GoldenInt& y, const GoldenInt& x);

/// Euclidean division x = q y + r with N(r) < N(y).
std::pair<GoldenInt, GoldenInt> divmod(const GoldenInt& x, const GoldenInt& y);

/// If u is a unit, returns (sign, k) with u = sign * t^k.
std::optional<std::pair<int, int>> unit_log(const GoldenInt& u);

bool are_associates(const GoldenInt& x, const GoldenInt& y);

/// Deterministic representative of the associate class x * {+-t^k}: the
/// totally positive associate with minimal trace; ties go to smaller |b|,
/// then to b > 0.
GoldenInt canonical_associate(const GoldenInt& x);
/// Same, also returning the unit u with x = u * canonical.
std::pair<GoldenInt, GoldenInt> canonical_associate_with_unit(const GoldenInt& x);

struct Bezout {
  GoldenInt g;  ///< canonical associate
  GoldenInt u;
  GoldenInt v;  ///< u x + v y = g
};
Bezout xgcd(const GoldenInt& x, const GoldenInt& y);
GoldenInt gcd(const GoldenInt& x, const GoldenInt& y);
GoldenInt lcm(const GoldenInt& x, const GoldenInt& y);

enum class PrimeClass { split, inert, ramified };
const char* to_string(PrimeClass c);

/// How a rational prime p decomposes in o.
struct PrimeSplitting {
  std::uint64_t p = 0;
  PrimeClass cls = PrimeClass::inert;
  /// Primes of o above p. Inert: {p}. Ramified: {2+t} (an associate of
  /// sqrt5), with p o = (2+t)^2 o. Split: {pi, pi'}, pi the one with larger
  /// first embedding.
  std::vector<GoldenInt> primes;
};
bool is_rational_prime(std::uint64_t p);
PrimeSplitting split_prime(std::uint64_t p);

/// Trial-division factorization of a positive rational integer.
std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n);

struct GoldenFactor {
  GoldenInt prime;  ///< canonical associate
  int exponent = 0;
  PrimeClass cls = PrimeClass::inert;
  std::uint64_t rational_prime = 0;  ///< the p lying under `prime`
};

struct GoldenFactorization {
  GoldenInt unit = 1;  ///< +-t^k
  std::vector<GoldenFactor> factors;

  GoldenInt expand() const;
  /// Exponent of the given canonical prime (0 if absent).
  int valuation(const GoldenInt& prime) const;
};
GoldenFactorization factor_golden(const GoldenInt& x);

/// Element num / den of K with den > 0 and gcd(num.a, num.b, den) = 1.
class GoldenNum {
 public:
  GoldenNum() : den_(1) {}
  GoldenNum(GoldenInt num, Int den = 1);
  GoldenNum(int n) : num_(n), den_(1) {}

  static GoldenNum tau() { return GoldenNum(GoldenInt::tau()); }
  static GoldenNum sqrt5() { return GoldenNum(GoldenInt(-1, 2)); }

  const GoldenInt& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  bool is_rational() const { return num_.is_rational(); }
  std::optional<GoldenInt> to_golden_int() const;
  /// Rational value, when b = 0.
  std::optional<Rational> to_rational() const;

  GoldenNum conj() const { return {num_.conj(), den_}; }
  Rational field_norm() const;
  Rational trace() const;
  GoldenNum inverse() const;
  int sign1() const { return num_.sign1(); }
  int sign2() const { return num_.sign2(); }
  double embed1() const;
  double embed2() const;

  /// Writes x = u + w t with u, w rational.
  std::pair<Rational, Rational> rational_parts() const;
  static GoldenNum from_rational_parts(const Rational& u, const Rational& w);

  GoldenNum operator-() const { return {-num_, den_}; }
  GoldenNum& operator+=(const GoldenNum& o);
  GoldenNum& operator-=(const GoldenNum& o);
  GoldenNum& operator*=(const GoldenNum& o);
  GoldenNum& operator/=(const GoldenNum& o);
  friend GoldenNum operator+(GoldenNum x, const GoldenNum& y) { return x += y; }
  friend GoldenNum operator-(GoldenNum x, const GoldenNum& y) { return x -= y; }
  friend GoldenNum operator*(GoldenNum x, const GoldenNum& y) { return x *= y; }
  friend GoldenNum operator/(GoldenNum x, const GoldenNum& y) { return x /= y; }
  GoldenNum pow(int k) const;

  friend bool operator==(const GoldenNum& x, const GoldenNum& y) {
    return x.den_ == y.den_ && x.num_ == y.num_;
  }

  std::string to_string() const;

 private:
  void normalize();

  GoldenInt num_;
  Int den_;
};

/// Exact integer square root; nullopt if n is not a perfect square.
std::optional<Int> exact_isqrt(const Int& n);

}  // namespace a4csl
