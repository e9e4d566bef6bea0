#include "a4csl/golden.hpp"

#include <cmath>
#include <numeric>

namespace a4csl {

namespace {

// floor(a / b) for b > 0.
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

// Nearest integer to p / n, halves rounded up.
Int round_div(Int p, Int n) {
  if (n < 0) {
    p = -p;
    n = -n;
  }
  return floor_div(2 * p + n, 2 * n);
}

// Sign of u + v sqrt5.
int sign_with_sqrt5(const Int& u, const Int& v) {
  const int su = u.sign();
  const int sv = v.sign();
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  const Int uu = u * u;
  const Int vv = 5 * v * v;
  // sqrt5 is irrational, so uu != vv here.
  if (su > 0) return uu > vv ? 1 : -1;
  return vv > uu ? 1 : -1;
}

constexpr double kTau = 1.6180339887498948482;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Tonelli-Shanks; n must be a nonzero quadratic residue mod the odd prime p.
std::uint64_t sqrt_mod(std::uint64_t n, std::uint64_t p) {
  n %= p;
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = static_cast<std::uint64_t>(s);
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(n, q, p);
  std::uint64_t r = powmod(n, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

GoldenInt unit_inverse(const GoldenInt& u) {
  // u^-1 = u' / n(u), n(u) = +-1.
  const GoldenInt c = u.conj();
  return u.field_norm() > 0 ? c : -c;
}

// Tie-break among totally positive associates of equal trace.
bool preferred(const GoldenInt& x, const GoldenInt& y) {
  const Int tx = x.trace(), ty = y.trace();
  if (tx != ty) return tx < ty;
  const Int bx = abs(x.b()), by = abs(y.b());
  if (bx != by) return bx < by;
  return x.b() > y.b();
}

}  // namespace

GoldenInt GoldenInt::unit_power(int k) {
  GoldenInt base = k >= 0 ? GoldenInt(0, 1) : GoldenInt(-1, 1);
  GoldenInt r = 1;
  for (int i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}

bool GoldenInt::is_unit() const { return abs_norm() == 1; }

Int GoldenInt::abs_norm() const {
  Int n = field_norm();
  return n < 0 ? Int(-n) : n;
}

int GoldenInt::sign1() const { return sign_with_sqrt5(2 * a_ + b_, b_); }
int GoldenInt::sign2() const { return sign_with_sqrt5(2 * a_ + b_, -b_); }

double GoldenInt::embed1() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * kTau;
}
double GoldenInt::embed2() const {
  return a_.convert_to<double>() + b_.convert_to<double>() * (1.0 - kTau);
}

GoldenInt& GoldenInt::operator+=(const GoldenInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenInt& GoldenInt::operator-=(const GoldenInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenInt& GoldenInt::operator*=(const GoldenInt& o) {
  // t^2 = t + 1
  const Int bd = b_ * o.b_;
  Int a = a_ * o.a_ + bd;
  Int b = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::strong_ordering operator<=>(const GoldenInt& x, const GoldenInt& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string GoldenInt::to_string() const {
  if (b_ == 0) return a_.str();
  std::string s;
  if (a_ != 0) s = a_.str();
  if (b_ > 0) {
    if (!s.empty()) s += '+';
  } else {
    s += '-';
  }
  const Int mag = abs(b_);
  if (mag != 1) s += mag.str() + "*";
  s += 't';
  return s;
}

std::optional<GoldenInt> exact_div(const GoldenInt& x, const GoldenInt& y) {
  if (y.is_zero()) throw DomainError("division by zero in o");
  const Int n = y.field_norm();
  const GoldenInt p = x * y.conj();
  if (p.a() % n != 0 || p.b() % n != 0) return std::nullopt;
  return GoldenInt(p.a() / n, p.b() / n);
}

bool divides(const GoldenInt& y, const GoldenInt& x) {
  if (y.is_zero()) return x.is_zero();
  return exact_div(x, y).has_value();
}

std::pair<GoldenInt, GoldenInt> divmod(const GoldenInt& x, const GoldenInt& y) {
  if (y.is_zero()) throw DomainError("division by zero in o");
  const Int n = y.field_norm();
  const GoldenInt p = x * y.conj();
  GoldenInt q(round_div(p.a(), n), round_div(p.b(), n));
  GoldenInt r = x - q * y;
  return {std::move(q), std::move(r)};
}

std::optional<std::pair<int, int>> unit_log(const GoldenInt& u) {
  if (!u.is_unit()) return std::nullopt;
  // Invariant: u = x * t^k.
  GoldenInt x = u;
  int k = 0;
  const GoldenInt tau = GoldenInt::tau();
  const GoldenInt tau_inv = GoldenInt(-1, 1);
  for (int guard = 0; guard < 4096; ++guard) {
    if (x == GoldenInt(1)) return std::pair{1, k};
    if (x == GoldenInt(-1)) return std::pair{-1, k};
    if (std::abs(x.embed1()) > 1.0) {
      x *= tau_inv;
      ++k;
    } else {
      x *= tau;
      --k;
    }
  }
  throw DomainError("unit_log: exponent out of range");
}

bool are_associates(const GoldenInt& x, const GoldenInt& y) {
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  const auto q = exact_div(x, y);
  return q && q->is_unit();
}

std::pair<GoldenInt, GoldenInt> canonical_associate_with_unit(const GoldenInt& x) {
  if (x.is_zero()) throw DomainError("canonical_associate of zero");
  const GoldenInt tau = GoldenInt::tau();
  const GoldenInt tau2 = GoldenInt(1, 1);
  const GoldenInt tau_m2 = GoldenInt(2, -1);
  GoldenInt y = x;
  GoldenInt u = 1;  // x = u * y
  if (y.field_norm() < 0) {
    y *= tau;
    u *= GoldenInt(-1, 1);
  }
  if (!y.is_totally_positive()) {
    y = -y;
    u = -u;
  }
  for (;;) {
    GoldenInt up = y * tau2;
    if (up.trace() < y.trace()) {
      y = std::move(up);
      u *= tau_m2;
      continue;
    }
    GoldenInt down = y * tau_m2;
    if (down.trace() < y.trace()) {
      y = std::move(down);
      u *= tau2;
      continue;
    }
    if (preferred(up, y)) {
      y = std::move(up);
      u *= tau_m2;
    } else if (preferred(down, y)) {
      y = std::move(down);
      u *= tau2;
    }
    break;
  }
  return {std::move(y), std::move(u)};
}

GoldenInt canonical_associate(const GoldenInt& x) { return canonical_associate_with_unit(x).first; }

Bezout xgcd(const GoldenInt& x, const GoldenInt& y) {
  if (x.is_zero() && y.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  GoldenInt r0 = x, r1 = y;
  GoldenInt s0 = 1, s1 = 0;
  GoldenInt t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    GoldenInt s = s0 - q * s1;
    GoldenInt t = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  auto [g, unit] = canonical_associate_with_unit(r0);
  const GoldenInt inv = unit_inverse(unit);
  return {std::move(g), s0 * inv, t0 * inv};
}

GoldenInt gcd(const GoldenInt& x, const GoldenInt& y) { return xgcd(x, y).g; }

GoldenInt lcm(const GoldenInt& x, const GoldenInt& y) {
  if (x.is_zero() || y.is_zero()) throw DomainError("lcm with zero argument");
  const GoldenInt g = gcd(x, y);
  return canonical_associate(*exact_div(x * y, g));
}

const char* to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::split:
      return "split";
    case PrimeClass::inert:
      return "inert";
    case PrimeClass::ramified:
      return "ramified";
  }
  return "?";
}

bool is_rational_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeSplitting split_prime(std::uint64_t p) {
  if (!is_rational_prime(p)) throw DomainError("split_prime: " + std::to_string(p) + " is not prime");
  PrimeSplitting s;
  s.p = p;
  if (p == 5) {
    s.cls = PrimeClass::ramified;
    s.primes = {GoldenInt(2, 1)};
    return s;
  }
  const std::uint64_t r = p % 5;
  if (r == 2 || r == 3) {
    s.cls = PrimeClass::inert;
    s.primes = {GoldenInt(static_cast<long long>(p))};
    return s;
  }
  // x^2 = x + 1 (mod p)  <=>  x = (1 + sqrt5) / 2.
  const std::uint64_t root5 = sqrt_mod(5, p);
  const std::uint64_t inv2 = (p + 1) / 2;
  const std::uint64_t x = mulmod((1 + root5) % p, inv2, p);
  GoldenInt pi = gcd(GoldenInt(Int(p)), GoldenInt(Int(x), -1));
  if (pi.abs_norm() != p) throw DomainError("split_prime: gcd did not produce a prime of norm p");
  GoldenInt pi_c = canonical_associate(pi.conj());
  if ((pi - pi_c).sign1() < 0) std::swap(pi, pi_c);
  s.cls = PrimeClass::split;
  s.primes = {pi, pi_c};
  return s;
}

std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n) {
  if (n == 0) throw DomainError("factor_integer(0)");
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

GoldenInt GoldenFactorization::expand() const {
  GoldenInt r = unit;
  for (const auto& f : factors)
    for (int i = 0; i < f.exponent; ++i) r *= f.prime;
  return r;
}

int GoldenFactorization::valuation(const GoldenInt& prime) const {
  for (const auto& f : factors)
    if (f.prime == prime) return f.exponent;
  return 0;
}

GoldenFactorization factor_golden(const GoldenInt& x) {
  if (x.is_zero()) throw DomainError("factor_golden(0)");
  const Int norm = x.abs_norm();
  if (norm > std::numeric_limits<std::uint64_t>::max())
    throw DomainError("factor_golden: norm too large for trial division");
  GoldenFactorization out;
  GoldenInt rest = x;
  for (const auto& [p, e] : factor_integer(norm.convert_to<std::uint64_t>())) {
    const PrimeSplitting s = split_prime(p);
    for (const GoldenInt& prime : s.primes) {
      int v = 0;
      while (auto q = exact_div(rest, prime)) {
        rest = std::move(*q);
        ++v;
      }
      if (v > 0) out.factors.push_back({prime, v, s.cls, p});
    }
  }
  if (!rest.is_unit()) throw DomainError("factor_golden: leftover cofactor is not a unit");
  out.unit = rest;
  return out;
}

GoldenNum::GoldenNum(GoldenInt num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void GoldenNum::normalize() {
  if (den_ == 0) throw DomainError("GoldenNum with zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Int g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(num_.a()), abs(num_.b())), den_);
  if (g != 1) {
    num_ = GoldenInt(num_.a() / g, num_.b() / g);
    den_ /= g;
  }
}

std::optional<GoldenInt> GoldenNum::to_golden_int() const {
  if (den_ != 1) return std::nullopt;
  return num_;
}

std::optional<Rational> GoldenNum::to_rational() const {
  if (!num_.is_rational()) return std::nullopt;
  return Rational(num_.a(), den_);
}

Rational GoldenNum::field_norm() const { return Rational(num_.field_norm(), den_ * den_); }
Rational GoldenNum::trace() const { return Rational(num_.trace(), den_); }

GoldenNum GoldenNum::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in K");
  return GoldenNum(num_.conj() * GoldenInt(den_), num_.field_norm());
}

double GoldenNum::embed1() const { return num_.embed1() / den_.convert_to<double>(); }
double GoldenNum::embed2() const { return num_.embed2() / den_.convert_to<double>(); }

std::pair<Rational, Rational> GoldenNum::rational_parts() const {
  return {Rational(num_.a(), den_), Rational(num_.b(), den_)};
}

GoldenNum GoldenNum::from_rational_parts(const Rational& u, const Rational& w) {
  const Int d = boost::multiprecision::lcm(denominator(u), denominator(w));
  return GoldenNum(GoldenInt(numerator(u) * (d / denominator(u)), numerator(w) * (d / denominator(w))), d);
}

GoldenNum& GoldenNum::operator+=(const GoldenNum& o) {
  num_ = num_ * GoldenInt(o.den_) + o.num_ * GoldenInt(den_);
  den_ *= o.den_;
  normalize();
  return *this;
}

GoldenNum& GoldenNum::operator-=(const GoldenNum& o) { return *this += -o; }

GoldenNum& GoldenNum::operator*=(const GoldenNum& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

GoldenNum& GoldenNum::operator/=(const GoldenNum& o) { return *this *= o.inverse(); }

GoldenNum GoldenNum::pow(int k) const {
  GoldenNum base = k >= 0 ? *this : inverse();
  GoldenNum r = 1;
  for (int i = 0; i < std::abs(k); ++i) r *= base;
  return r;
}

std::string GoldenNum::to_string() const {
  if (den_ == 1) return num_.to_string();
  if (num_.is_rational()) return num_.a().str() + "/" + den_.str();
  return "(" + num_.to_string() + ")/" + den_.str();
}

std::optional<Int> exact_isqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

}  // namespace a4csl
