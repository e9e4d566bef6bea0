#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("Hamilton relations") {
  const QuatK one(1, 0, 0, 0), i(0, 1, 0, 0), j(0, 0, 1, 0), k(0, 0, 0, 1);
  const QuatK minus_one(-1, 0, 0, 0);
  CHECK(i * i == minus_one);
  CHECK(j * j == minus_one);
  CHECK(k * k == minus_one);
  CHECK(i * j * k == minus_one);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(one * i == i);
}

TEST_CASE("norm and trace") {
  CHECK(QuatK(1, 0, 0, 0).nr() == GoldenNum(1));
  const GoldenNum five_t2 = GoldenNum(5) * t * t;
  CHECK(tq(t, 2 * t, 0, 0).nr() == five_t2);
  CHECK(tq(t * t, t, t, 1).nr() == five_t2);
  for (int n = 0; n < 200; ++n) {
    const QuatK p = random_quat(), q = random_quat(), r = random_quat();
    CHECK((p * q).nr() == p.nr() * q.nr());
    CHECK((p * q).conj() == q.conj() * p.conj());
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * p.conj() == QuatK::scalar(p.nr()));
    CHECK(p + p.conj() == QuatK::scalar(p.trace()));
    if (!p.is_zero()) {
      CHECK(p.nr().sign1() > 0);
      CHECK(p.nr().sign2() > 0);
    }
  }
}

TEST_CASE("twist") {
  CHECK(QuatK(1, 0, 0, 0).twist() == QuatK(1, 0, 0, 0));
  CHECK(tq(0, 0, t, 0).twist() == tq(0, 0, 0, GoldenNum(1) - t));
  CHECK(tq(t, 2 * t, 0, 0).twist().nr() == (GoldenNum(5) * t * t).conj());
  for (int n = 0; n < 1000; ++n) {
    const QuatK p = random_quat(), q = random_quat();
    CHECK(p.twist().twist() == p);
    CHECK((p * q).twist() == q.twist() * p.twist());
    CHECK((p + q).twist() == p.twist() + q.twist());
    CHECK(p.twist().nr() == p.nr().conj());
  }
}

TEST_CASE("phi maps") {
  CHECK(phi_plus(QuatK(1, 0, 0, 0)) == QuatK(2, 0, 0, 0));
  const GoldenNum s5 = GoldenNum::sqrt5();
  CHECK(phi_plus(s5 * QuatK(1, 0, 0, 0)).is_zero());
  for (int n = 0; n < 200; ++n) {
    const QuatK x = random_quat();
    CHECK(phi_plus(x).twist() == phi_plus(x));
    CHECK(phi_minus(x).twist() == -phi_minus(x));
    CHECK(phi_plus(s5 * x) == s5 * phi_minus(x));
    CHECK(phi_minus(s5 * x) == s5 * phi_plus(x));
    // ker(phi_plus) contains im(phi_minus) and vice versa.
    CHECK(phi_plus(phi_minus(x)).is_zero());
    CHECK(phi_minus(phi_plus(x)).is_zero());
  }
}

TEST_CASE("inverse") {
  CHECK(QuatK(1, 0, 0, 0).inverse() == QuatK(1, 0, 0, 0));
  CHECK(QuatK(0, 1, 0, 0).inverse() == QuatK(0, -1, 0, 0));
  CHECK_THROWS_AS(QuatK().inverse(), DomainError);
  for (int n = 0; n < 100; ++n) {
    QuatK q = random_quat();
    while (q.is_zero()) q = random_quat();
    CHECK(q * q.inverse() == QuatK(1, 0, 0, 0));
    CHECK(q.inverse() * q == QuatK(1, 0, 0, 0));
  }
}

TEST_CASE("trace form conjugation identity") {
  for (int n = 0; n < 200; ++n) {
    const QuatK u = random_quat(), v = random_quat();
    CHECK(trace_form(u, v).conj() == (v.conj().twist() * u.twist()).trace());
    CHECK(trace_form(u, v) == trace_form(v, u));
  }
}

TEST_CASE("rendering") {
  CHECK(tq(t, 2 * t, 0, GoldenNum(GoldenInt(1), 2)).to_string() == "(t, 2*t, 0, 1/2)");
}
