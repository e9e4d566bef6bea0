#include "norm_search.hpp"

#include "a4csl/icosian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <tuple>
#include <thread>

namespace a4csl::detail {

namespace {

constexpr int N = 8;
using Mat = std::array<std::array<std::int64_t, N>, N>;

std::atomic<std::uint64_t> g_nodes{0};

Mat symmetric_from_upper(const std::int64_t t[8][8]) {
  Mat m{};
  for (int k = 0; k < N; ++k) {
    m[k][k] = 2 * t[k][k];
    for (int l = k + 1; l < N; ++l) m[k][l] = m[l][k] = t[k][l];
  }
  return m;
}

Mat transform(const Mat& m, const Mat& u) {
  Mat t{}, r{};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) t[i][j] += m[i][k] * u[k][j];
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) r[i][j] += u[k][i] * t[k][j];
  return r;
}

void gram_schmidt(const Mat& h, double mu[N][N], double bn[N]) {
  double r[N][N];
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < i; ++j) {
      double s = static_cast<double>(h[i][j]);
      for (int k = 0; k < j; ++k) s -= mu[j][k] * r[i][k];
      r[i][j] = s;
      mu[i][j] = s / bn[j];
    }
    double s = static_cast<double>(h[i][i]);
    for (int k = 0; k < i; ++k) s -= mu[i][k] * r[i][k];
    bn[i] = s;
  }
}

// LLL on a positive definite integer Gram matrix; returns U with h <- U^T h U.
Mat lll_reduce(Mat& h) {
  Mat u{};
  for (int i = 0; i < N; ++i) u[i][i] = 1;
  double mu[N][N], bn[N];
  int k = 1;
  while (k < N) {
    gram_schmidt(h, mu, bn);
    for (int j = k - 1; j >= 0; --j) {
      const auto r = static_cast<std::int64_t>(std::llround(mu[k][j]));
      if (r == 0) continue;
      for (int i = 0; i < N; ++i) u[i][k] -= r * u[i][j];
      h[k][k] += r * r * h[j][j] - 2 * r * h[k][j];
      for (int i = 0; i < N; ++i)
        if (i != k) h[i][k] = h[k][i] = h[i][k] - r * h[i][j];
      gram_schmidt(h, mu, bn);
    }
    if (bn[k] < (0.99 - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      for (int i = 0; i < N; ++i) std::swap(u[i][k], u[i][k - 1]);
      std::swap(h[k], h[k - 1]);
      for (int i = 0; i < N; ++i) std::swap(h[i][k], h[i][k - 1]);
      k = std::max(k - 1, 1);
    } else {
      ++k;
    }
  }
  return u;
}

struct Prime {
  std::int64_t p0, p1, n;  // conjugate p0 + p1 t, |norm|
};

struct Setup {
  Mat g;  // y^T g y = 2 Tr(nr)
  Mat a;  // y^T a y = 2 (rational part of nr)
  Mat u;  // x = u y
  double q[N];
  double mu[N][N];
  std::int64_t level;   // 2 Tr(delta)
  std::int64_t target;  // 2 delta.a
  std::vector<Prime> primes;
};

Setup make_setup(const GoldenInt& delta, bool primitive_only) {
  static const auto base = [] {
    const ZTables& tab = z_tables();
    const Mat ma = symmetric_from_upper(tab.nr_a);
    const Mat mb = symmetric_from_upper(tab.nr_b);
    Mat g{};
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) g[i][j] = 2 * ma[i][j] + mb[i][j];
    Mat h = g;
    const Mat u = lll_reduce(h);
    return std::tuple<Mat, Mat, Mat>{h, transform(ma, u), u};
  }();
  Setup s;
  std::tie(s.g, s.a, s.u) = base;

  // Exact LDL^T of g, then rounded.
  std::array<std::array<Rational, N>, N> qm;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) qm[i][j] = Rational(s.g[i][j]);
  for (int i = 0; i < N; ++i) {
    s.q[i] = qm[i][i].convert_to<double>();
    for (int j = i + 1; j < N; ++j) s.mu[i][j] = (qm[i][j] / qm[i][i]).convert_to<double>();
    for (int k = i + 1; k < N; ++k)
      for (int l = k; l < N; ++l) {
        qm[k][l] -= qm[i][k] * qm[i][l] / qm[i][i];
        qm[l][k] = qm[k][l];
      }
  }

  s.level = 2 * delta.trace().convert_to<std::int64_t>();
  s.target = 2 * delta.a().convert_to<std::int64_t>();
  if (primitive_only)
    for (const auto& f : factor_golden(delta).factors) {
      if (f.exponent < 2) continue;
      const GoldenInt c = f.prime.conj();
      s.primes.push_back({c.a().convert_to<std::int64_t>(), c.b().convert_to<std::int64_t>(),
                          f.prime.abs_norm().convert_to<std::int64_t>()});
    }
  return s;
}

std::int64_t isqrt_exact(std::int64_t d) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
  while (r * r > d) --r;
  while ((r + 1) * (r + 1) <= d) ++r;
  return r * r == d ? r : -1;
}

class Walker {
 public:
  explicit Walker(const Setup& s) : s_(s) {}

  void run_top(std::int64_t v, std::vector<SmallZ>& out) {
    out_ = &out;
    for (int k = 0; k < N; ++k) lin_g_[N][k] = lin_a_[N][k] = 0;
    const_g_[N] = const_a_[N] = 0;
    const double budget = static_cast<double>(s_.level) + kGuard;
    const double d = static_cast<double>(v);
    const double r = budget - s_.q[N - 1] * d * d;
    if (r < -kGuard) return;
    place(N - 1, v);
    descend(N - 2, r);
  }

  std::uint64_t nodes = 0;

 private:
  static constexpr double kGuard = 1e-6;

  void place(int i, std::int64_t v) {
    y_[i] = v;
    const_g_[i] = const_g_[i + 1] + s_.g[i][i] * v * v + 2 * v * lin_g_[i + 1][i];
    const_a_[i] = const_a_[i + 1] + s_.a[i][i] * v * v + 2 * v * lin_a_[i + 1][i];
    for (int k = 0; k < i; ++k) {
      lin_g_[i][k] = lin_g_[i + 1][k] + s_.g[k][i] * v;
      lin_a_[i][k] = lin_a_[i + 1][k] + s_.a[k][i] * v;
    }
  }

  void descend(int i, double r) {
    ++nodes;
    if (i == 0) {
      leaf();
      return;
    }
    double c = 0;
    for (int j = i + 1; j < N; ++j) c -= s_.mu[i][j] * static_cast<double>(y_[j]);
    const double half = std::sqrt(std::max(r, 0.0) / s_.q[i]) + kGuard;
    const auto lo = static_cast<std::int64_t>(std::ceil(c - half));
    const auto hi = static_cast<std::int64_t>(std::floor(c + half));
    for (std::int64_t v = lo; v <= hi; ++v) {
      const double d = static_cast<double>(v) - c;
      const double ri = r - s_.q[i] * d * d;
      if (ri < -kGuard) continue;
      place(i, v);
      descend(i - 1, ri);
    }
  }

  // g00 y0^2 + 2 L y0 + C = level, solved over Z.
  void leaf() {
    const std::int64_t g00 = s_.g[0][0];
    const std::int64_t l = lin_g_[1][0];
    const std::int64_t c = const_g_[1] - s_.level;
    const std::int64_t disc = l * l - g00 * c;
    if (disc < 0) return;
    const std::int64_t root = isqrt_exact(disc);
    if (root < 0) return;
    try_root(-l + root, g00);
    if (root != 0) try_root(-l - root, g00);
  }

  void try_root(std::int64_t num, std::int64_t g00) {
    if (num % g00 != 0) return;
    const std::int64_t y0 = num / g00;
    if (s_.a[0][0] * y0 * y0 + 2 * y0 * lin_a_[1][0] + const_a_[1] != s_.target) return;
    y_[0] = y0;
    SmallZ x{};
    for (int i = 0; i < N; ++i) {
      std::int64_t acc = 0;
      for (int j = 0; j < N; ++j) acc += s_.u[i][j] * y_[j];
      if (acc > std::numeric_limits<std::int32_t>::max() || acc < std::numeric_limits<std::int32_t>::min())
        throw DomainError("search coordinate out of range");
      x[i] = static_cast<std::int32_t>(acc);
    }
    for (const Prime& p : s_.primes) {
      bool divisible = true;
      for (int i = 0; i < 4 && divisible; ++i) {
        const std::int64_t xa = x[i], xb = x[i + 4];
        divisible = (xa * p.p0 + xb * p.p1) % p.n == 0 && (xa * p.p1 + xb * p.p0 + xb * p.p1) % p.n == 0;
      }
      if (divisible) return;
    }
    out_->push_back(x);
  }

  const Setup& s_;
  std::vector<SmallZ>* out_ = nullptr;
  std::int64_t y_[N]{};
  std::int64_t lin_g_[N + 1][N]{};
  std::int64_t lin_a_[N + 1][N]{};
  std::int64_t const_g_[N + 1]{};
  std::int64_t const_a_[N + 1]{};
};

}  // namespace

std::vector<SmallZ> search_norm(const GoldenInt& delta, bool primitive_only, unsigned threads) {
  if (delta.is_zero()) throw DomainError("search_norm: zero norm");
  g_nodes = 0;
  if (!delta.is_totally_positive()) return {};
  const Setup s = make_setup(delta, primitive_only);

  const double top = std::sqrt((static_cast<double>(s.level) + 1e-6) / s.q[N - 1]) + 1e-6;
  const auto lo = static_cast<std::int64_t>(std::ceil(-top));
  const auto hi = static_cast<std::int64_t>(std::floor(top));
  const std::size_t chunks = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<SmallZ>> parts(chunks);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    Walker w(s);
    for (std::size_t c = next++; c < chunks; c = next++) w.run_top(lo + static_cast<std::int64_t>(c), parts[c]);
    g_nodes += w.nodes;
  };
  const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (nt == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<SmallZ> all;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::uint64_t last_search_nodes() { return g_nodes.load(); }

}  // namespace a4csl::detail
