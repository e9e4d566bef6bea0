#include "a4csl/hnf.hpp"

#include <algorithm>
#include <sstream>

namespace a4csl {

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

using Column = std::vector<Int>;

void axpy(Column& y, const Int& q, const Column& x) {
  if (q == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * x[i];
}

}  // namespace

IntMatrix hnf_columns(const IntMatrix& gens) {
  const std::size_t n = gens.rows();
  std::vector<Column> pool;
  pool.reserve(gens.cols());
  for (std::size_t c = 0; c < gens.cols(); ++c) pool.push_back(gens.column(c));

  std::vector<Column> piv;
  for (std::size_t row = 0; row < n; ++row) {
    // Euclid on entry `row` across the pool.
    for (;;) {
      std::size_t best = pool.size();
      for (std::size_t c = 0; c < pool.size(); ++c) {
        if (pool[c][row] == 0) continue;
        if (best == pool.size() || abs(pool[c][row]) < abs(pool[best][row])) best = c;
      }
      if (best == pool.size()) throw DomainError("hnf_columns: generators do not have full rank");
      bool done = true;
      for (std::size_t c = 0; c < pool.size(); ++c) {
        if (c == best || pool[c][row] == 0) continue;
        axpy(pool[c], pool[c][row] / pool[best][row], pool[best]);
        if (pool[c][row] != 0) done = false;
      }
      if (done) {
        Column p = std::move(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        if (p[row] < 0)
          for (auto& x : p) x = -x;
        piv.push_back(std::move(p));
        break;
      }
    }
    std::erase_if(pool, [](const Column& c) { return std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; }); });
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) axpy(piv[j], floor_div(piv[j][i], piv[i][i]), piv[i]);

  IntMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) h(i, j) = piv[j][i];
  return h;
}

Int triangular_determinant(const IntMatrix& h) {
  Int d = 1;
  for (std::size_t i = 0; i < h.rows(); ++i) d *= h(i, i);
  return d;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1) throw DomainError("to_integer: non-integral entry");
      r(i, j) = numerator(m(i, j));
    }
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) throw DomainError("inverse of a singular matrix");
    if (p != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    const Rational piv = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= piv;
      inv(col, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational determinant(const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

RatMatrix RationalLattice::basis() const {
  RatMatrix b = to_rational(hnf);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) /= Rational(scale);
  return b;
}

RationalLattice rational_hnf(const RatMatrix& gens) {
  Int d = 1;
  for (const auto& x : gens.data()) d = boost::multiprecision::lcm(d, denominator(x));
  IntMatrix scaled(gens.rows(), gens.cols());
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < gens.cols(); ++j) {
      const Rational& x = gens(i, j);
      scaled(i, j) = numerator(x) * (d / denominator(x));
    }
  IntMatrix h = hnf_columns(scaled);
  // Pull out any common factor so the representation is unique.
  Int g = d;
  for (const auto& x : h.data()) g = boost::multiprecision::gcd(g, abs(x));
  if (g != 1) {
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < h.cols(); ++j) h(i, j) /= g;
    d /= g;
  }
  return {std::move(h), d};
}

RationalLattice dual(const RationalLattice& l) { return rational_hnf(inverse(l.basis()).transpose()); }

RationalLattice intersect(const RationalLattice& a, const RationalLattice& b) {
  const RatMatrix da = dual(a).basis();
  const RatMatrix db = dual(b).basis();
  RatMatrix gens(da.rows(), da.cols() + db.cols());
  for (std::size_t i = 0; i < da.rows(); ++i) {
    for (std::size_t j = 0; j < da.cols(); ++j) gens(i, j) = da(i, j);
    for (std::size_t j = 0; j < db.cols(); ++j) gens(i, da.cols() + j) = db(i, j);
  }
  return dual(rational_hnf(gens));
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace a4csl
