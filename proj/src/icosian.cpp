#include "a4csl/icosian.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace a4csl {

namespace {

using Mat4K = std::array<std::array<GoldenNum, 4>, 4>;

Mat4K inverse_k(Mat4K a) {
  Mat4K inv{};
  for (std::size_t i = 0; i < 4; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t p = col;
    while (p < 4 && a[p][col].is_zero()) ++p;
    if (p == 4) throw DomainError("singular matrix over K");
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const GoldenNum piv = a[col][col].inverse();
    for (std::size_t j = 0; j < 4; ++j) {
      a[col][j] *= piv;
      inv[col][j] *= piv;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const GoldenNum f = a[r][col];
      for (std::size_t j = 0; j < 4; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

GoldenNum determinant_k(Mat4K a) {
  GoldenNum det = 1;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t p = col;
    while (p < 4 && a[p][col].is_zero()) ++p;
    if (p == 4) return 0;
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const GoldenNum inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < 4; ++r) {
      if (a[r][col].is_zero()) continue;
      const GoldenNum f = a[r][col] * inv;
      for (std::size_t j = col; j < 4; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

const Mat4K& basis_inverse() {
  static const Mat4K inv = [] {
    Mat4K b{};
    const auto& basis = icosian_basis();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) b[i][j] = basis[i][j];
    return inverse_k(b);
  }();
  return inv;
}

GoldenInt require_integral(const GoldenNum& x, const char* what) {
  auto v = x.to_golden_int();
  if (!v) throw DomainError(std::string(what) + ": value not in o");
  return *v;
}

GoldenInt gcd_all(const std::vector<GoldenInt>& xs) {
  GoldenInt g = 0;
  for (const auto& x : xs)
    if (!x.is_zero()) g = g.is_zero() ? canonical_associate(x) : gcd(g, x);
  if (g.is_zero()) throw DomainError("content of zero");
  return g;
}

std::vector<GoldenInt> basis_traces(const Icosian& q) {
  std::vector<GoldenInt> t;
  t.reserve(8);
  for (const auto& y : icosian_z_basis()) t.push_back(require_integral(trace_form(q.value(), y), "trace"));
  return t;
}

}  // namespace

const std::array<QuatK, 4>& icosian_basis() {
  static const std::array<QuatK, 4> b = [] {
    const GoldenNum half(1, 2);
    const GoldenNum t = GoldenNum::tau();
    return std::array<QuatK, 4>{QuatK(1, 0, 0, 0), QuatK(0, 1, 0, 0), QuatK(half, half, half, half),
                                QuatK(half * (GoldenNum(1) - t), half * t, 0, half)};
  }();
  return b;
}

const std::array<QuatK, 8>& icosian_z_basis() {
  static const std::array<QuatK, 8> e = [] {
    std::array<QuatK, 8> r;
    const auto& b = icosian_basis();
    for (std::size_t i = 0; i < 4; ++i) {
      r[i] = b[i];
      r[i + 4] = GoldenNum::tau() * b[i];
    }
    return r;
  }();
  return e;
}

Icosian Icosian::from_ocoords(std::array<GoldenInt, 4> c) {
  QuatK v;
  const auto& b = icosian_basis();
  for (std::size_t i = 0; i < 4; ++i)
    if (!c[i].is_zero()) v += GoldenNum(c[i]) * b[i];
  return Icosian(std::move(v), std::move(c));
}

Icosian Icosian::from_zcoords(const ZVec& z) {
  std::array<GoldenInt, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = GoldenInt(z[i], z[i + 4]);
  return from_ocoords(std::move(c));
}

ZVec Icosian::zcoords() const {
  ZVec z;
  for (std::size_t i = 0; i < 4; ++i) {
    z[i] = o_[i].a();
    z[i + 4] = o_[i].b();
  }
  return z;
}

GoldenInt Icosian::nr() const { return require_integral(value_.nr(), "nr"); }
GoldenInt Icosian::trace() const { return require_integral(value_.trace(), "tr"); }

Icosian Icosian::conj() const { return *membership(value_.conj()); }

Icosian Icosian::twist() const {
  auto t = membership(value_.twist());
  if (!t) throw DomainError("twist left the icosian ring");
  return *t;
}

Icosian Icosian::scaled(const GoldenInt& s) const {
  std::array<GoldenInt, 4> c = o_;
  for (auto& x : c) x *= s;
  return Icosian(GoldenNum(s) * value_, std::move(c));
}

Icosian operator*(const Icosian& x, const Icosian& y) {
  auto p = membership(x.value_ * y.value_);
  if (!p) throw DomainError("icosian product left the ring");
  return *p;
}

Icosian operator+(const Icosian& x, const Icosian& y) {
  std::array<GoldenInt, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = x.o_[i] + y.o_[i];
  return Icosian(x.value_ + y.value_, std::move(c));
}

Icosian operator-(const Icosian& x, const Icosian& y) {
  std::array<GoldenInt, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = x.o_[i] - y.o_[i];
  return Icosian(x.value_ - y.value_, std::move(c));
}

std::optional<Icosian> membership(const QuatK& q) {
  const Mat4K& inv = basis_inverse();
  std::array<GoldenInt, 4> c;
  for (std::size_t j = 0; j < 4; ++j) {
    GoldenNum s = 0;
    for (std::size_t i = 0; i < 4; ++i)
      if (!q[i].is_zero()) s += q[i] * inv[i][j];
    auto v = s.to_golden_int();
    if (!v) return std::nullopt;
    c[j] = std::move(*v);
  }
  return Icosian(q, std::move(c));
}

bool is_member_by_duality(const QuatK& q) {
  for (const auto& y : icosian_z_basis())
    if (!trace_form(q, y).is_integral()) return false;
  return true;
}

std::array<std::array<GoldenNum, 4>, 4> icosian_trace_gram() {
  std::array<std::array<GoldenNum, 4>, 4> g;
  const auto& b = icosian_basis();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g[i][j] = trace_form(b[i], b[j]);
  return g;
}

GoldenNum icosian_gram_determinant() { return determinant_k(icosian_trace_gram()); }

GoldenInt content(const Icosian& q) {
  return gcd_all({q.ocoords().begin(), q.ocoords().end()});
}

GoldenInt content_by_traces(const Icosian& q) { return gcd_all(basis_traces(q)); }

bool is_primitive(const Icosian& q) { return content(q) == GoldenInt(1); }

std::pair<GoldenInt, Icosian> primitive_part(const Icosian& q) {
  GoldenInt g = content(q);
  std::array<GoldenInt, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = *exact_div(q.ocoords()[i], g);
  return {std::move(g), Icosian::from_ocoords(std::move(c))};
}

bool is_admissible(const Icosian& q) {
  if (q.is_zero()) throw DomainError("is_admissible of zero");
  return exact_isqrt(q.nr().abs_norm()).has_value();
}

bool is_admissible_by_valuations(const Icosian& q) {
  if (q.is_zero()) throw DomainError("is_admissible of zero");
  const GoldenFactorization f = factor_golden(q.nr());
  std::vector<std::pair<std::uint64_t, int>> split_parity;
  for (const auto& fac : f.factors) {
    if (fac.cls == PrimeClass::ramified && fac.exponent % 2 != 0) return false;
    if (fac.cls == PrimeClass::split) split_parity.emplace_back(fac.rational_prime, fac.exponent % 2);
  }
  // Sum the parities per rational prime; a missing partner has exponent 0.
  std::sort(split_parity.begin(), split_parity.end());
  for (std::size_t i = 0; i < split_parity.size();) {
    std::size_t j = i;
    int parity = 0;
    while (j < split_parity.size() && split_parity[j].first == split_parity[i].first) parity ^= split_parity[j++].second;
    if (parity != 0) return false;
    i = j;
  }
  return true;
}

NormExtension norm_extension(const GoldenInt& delta) {
  if (!delta.is_totally_positive()) throw DomainError("norm_extension: delta must be totally positive");
  const GoldenFactorization f = factor_golden(delta);
  Int sigma = 1;
  GoldenInt alpha = 1;
  std::vector<std::uint64_t> primes;
  for (const auto& fac : f.factors)
    if (primes.empty() || primes.back() != fac.rational_prime) primes.push_back(fac.rational_prime);
  for (const std::uint64_t rp : primes) {
    const PrimeSplitting s = split_prime(rp);
    const Int p(rp);
    const int a = f.valuation(s.primes[0]);
    switch (s.cls) {
      case PrimeClass::inert:
        sigma *= pow(p, static_cast<unsigned>(a));
        break;
      case PrimeClass::ramified:
        if (a % 2 != 0) throw NotAdmissibleError("odd valuation at sqrt5");
        sigma *= pow(p, static_cast<unsigned>(a / 2));
        break;
      case PrimeClass::split: {
        const int b = f.valuation(s.primes[1]);
        if ((a - b) % 2 != 0) throw NotAdmissibleError("unequal parity on a split prime pair");
        sigma *= pow(p, static_cast<unsigned>(std::max(a, b)));
        const GoldenInt& deficient = a < b ? s.primes[0] : s.primes[1];
        for (int k = 0; k < std::abs(a - b) / 2; ++k) alpha *= deficient;
        break;
      }
    }
  }
  const auto u = exact_div(alpha * alpha * delta, GoldenInt(sigma));
  if (!u || !u->is_unit()) throw DomainError("norm_extension: alpha^2 delta / sigma is not a unit");
  const auto lg = unit_log(*u);
  if (lg->first != 1 || lg->second % 2 != 0) throw DomainError("norm_extension: unit is not a square");
  alpha *= GoldenInt::unit_power(-lg->second / 2);
  if (alpha.trace() < 0) alpha = -alpha;
  if (alpha * alpha * delta != GoldenInt(sigma)) throw DomainError("norm_extension: normalisation failed");
  return {std::move(alpha), std::move(sigma)};
}

ExtensionPair extension(const Icosian& q) {
  if (q.is_zero() || !is_primitive(q)) throw NotPrimitiveError("extension requires a primitive icosian");
  if (!is_admissible(q)) throw NotAdmissibleError("extension requires an admissible icosian");
  NormExtension ne = norm_extension(q.nr());
  Icosian qa = q.scaled(ne.alpha);
  return {q, std::move(ne.alpha), std::move(qa), std::move(ne.sigma)};
}

Icosian trace_witness(const Icosian& q) {
  if (q.is_zero() || !is_primitive(q)) throw NotPrimitiveError("trace_witness requires a primitive icosian");
  const std::vector<GoldenInt> t = basis_traces(q);
  std::vector<GoldenInt> coef(t.size(), 0);
  GoldenInt g = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].is_zero()) continue;
    if (g.is_zero()) {
      auto [c, u] = canonical_associate_with_unit(t[k]);
      g = c;
      coef[k] = *exact_div(GoldenInt(1), u);
      continue;
    }
    const Bezout bz = xgcd(g, t[k]);
    for (std::size_t j = 0; j < k; ++j) coef[j] *= bz.u;
    coef[k] = bz.v;
    g = bz.g;
  }
  if (g != GoldenInt(1)) throw NotPrimitiveError("trace_witness: trace ideal is not the unit ideal");
  ZVec z;
  z.fill(0);
  std::array<GoldenInt, 4> c{0, 0, 0, 0};
  for (std::size_t k = 0; k < 8; ++k) {
    // e_k = b_k for k < 4 and t b_{k-4} otherwise.
    c[k % 4] += k < 4 ? coef[k] : coef[k] * GoldenInt::tau();
  }
  return Icosian::from_ocoords(std::move(c));
}

Icosian extended_trace_witness(const ExtensionPair& pair) {
  const Icosian z0 = trace_witness(pair.q);
  const Bezout bz = xgcd(pair.alpha, pair.alpha.conj());
  if (bz.g != GoldenInt(1)) throw DomainError("extended_trace_witness: alpha and alpha' are not coprime");
  const Icosian x = z0.scaled(bz.u);
  const Icosian y = z0.scaled(bz.v.conj());
  return x.scaled(GoldenInt::tau()) + y.scaled(GoldenInt(1, -1));
}

RightIdealLabel right_ideal_label(const Icosian& q) {
  if (q.is_zero()) throw DomainError("right_ideal_label of zero");
  return {hnf_columns(left_mult_matrix(q.zcoords()))};
}

const std::vector<Icosian>& units_mod_center() {
  static const std::vector<Icosian> units = [] {
    std::vector<Icosian> gens;
    for (const auto& b : icosian_basis()) {
      const Icosian g = *membership(b);
      gens.push_back(g);
      gens.push_back(*membership(b.inverse()));
    }
    std::set<Icosian> seen{Icosian::one()};
    std::deque<Icosian> todo{Icosian::one()};
    while (!todo.empty()) {
      const Icosian g = todo.front();
      todo.pop_front();
      for (const auto& s : gens) {
        Icosian h = g * s;
        if (h.nr() != GoldenInt(1)) continue;
        if (seen.insert(h).second) todo.push_back(std::move(h));
      }
    }
    return std::vector<Icosian>(seen.begin(), seen.end());
  }();
  return units;
}

const ZTables& z_tables() {
  static const ZTables tables = [] {
    ZTables t{};
    const auto& e = icosian_z_basis();
    auto zc = [](const QuatK& q) {
      auto m = membership(q);
      if (!m) throw DomainError("z_tables: element outside I");
      ZVec z = m->zcoords();
      std::array<std::int64_t, 8> r;
      for (std::size_t k = 0; k < 8; ++k) r[k] = z[k].convert_to<std::int64_t>();
      return r;
    };
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        const auto p = zc(e[i] * e[j]);
        for (std::size_t k = 0; k < 8; ++k) t.mul[i][j][k] = p[k];
      }
    for (std::size_t j = 0; j < 8; ++j) {
      const auto tw = zc(e[j].twist());
      const auto cj = zc(e[j].conj());
      for (std::size_t i = 0; i < 8; ++i) {
        t.twist[i][j] = tw[i];
        t.conj[i][j] = cj[i];
      }
    }
    for (std::size_t k = 0; k < 8; ++k)
      for (std::size_t l = k; l < 8; ++l) {
        const GoldenNum c = k == l ? e[k].nr() : trace_form(e[k], e[l]);
        const GoldenInt ci = require_integral(c, "nr form");
        t.nr_a[k][l] = ci.a().convert_to<std::int64_t>();
        t.nr_b[k][l] = ci.b().convert_to<std::int64_t>();
      }
    return t;
  }();
  return tables;
}

IntMatrix left_mult_matrix(const ZVec& q) {
  const ZTables& t = z_tables();
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k)
        if (t.mul[i][j][k] != 0) m(k, j) += q[i] * t.mul[i][j][k];
  }
  return m;
}

IntMatrix right_mult_matrix(const ZVec& q) {
  const ZTables& t = z_tables();
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k)
        if (t.mul[j][i][k] != 0) m(k, j) += q[i] * t.mul[j][i][k];
  }
  return m;
}

}  // namespace a4csl
