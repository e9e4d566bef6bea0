#pragma once

#include "a4csl/a4lattice.hpp"
#include "a4csl/golden.hpp"
#include "a4csl/icosian.hpp"
#include "a4csl/quat.hpp"

#include <random>

namespace testing {

using namespace a4csl;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline GoldenInt random_golden(long r = 20) { return {uniform(-r, r), uniform(-r, r)}; }

inline GoldenInt random_nonzero_golden(long r = 20) {
  for (;;) {
    GoldenInt x = random_golden(r);
    if (!x.is_zero()) return x;
  }
}

inline GoldenNum random_num(long r = 9) { return GoldenNum(random_golden(r), uniform(1, 6)); }

inline QuatK random_quat(long r = 9) { return {random_num(r), random_num(r), random_num(r), random_num(r)}; }

inline Icosian random_icosian(long r = 3) {
  for (;;) {
    Icosian q = Icosian::from_ocoords({random_golden(r), random_golden(r), random_golden(r), random_golden(r)});
    if (!q.is_zero()) return q;
  }
}

inline QuatK tq(const GoldenNum& a, const GoldenNum& b, const GoldenNum& c, const GoldenNum& d) { return {a, b, c, d}; }

inline const GoldenNum t = GoldenNum::tau();

}  // namespace testing
