#include "a4csl/quat.hpp"

namespace a4csl {

bool QuatK::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

GoldenNum QuatK::nr() const {
  return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

QuatK QuatK::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero quaternion");
  const GoldenNum inv = nr().inverse();
  return inv * conj();
}

QuatK& QuatK::operator+=(const QuatK& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

QuatK& QuatK::operator-=(const QuatK& o) {
  for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

QuatK operator*(const QuatK& p, const QuatK& q) {
  const auto& [a1, b1, c1, d1] = p.c_;
  const auto& [a2, b2, c2, d2] = q.c_;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
          a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
          a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

QuatK operator*(const GoldenNum& s, const QuatK& q) {
  return {s * q.c_[0], s * q.c_[1], s * q.c_[2], s * q.c_[3]};
}

std::string QuatK::to_string() const {
  return "(" + c_[0].to_string() + ", " + c_[1].to_string() + ", " + c_[2].to_string() + ", " +
         c_[3].to_string() + ")";
}

GoldenNum trace_form(const QuatK& u, const QuatK& v) { return (u * v.conj()).trace(); }

}  // namespace a4csl
