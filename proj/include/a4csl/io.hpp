#pragma once

// Text and JSON forms.
//   golden:     integers, t or tau, + - * / ^ and parentheses; "2t" = 2*t
//   quaternion: "(a, b, c, d)", optionally prefixed by a scalar, e.g. "1/2(1,1,1,1)"

#include "a4csl/a4lattice.hpp"
#include "a4csl/counting.hpp"
#include "a4csl/golden.hpp"
#include "a4csl/icosian.hpp"
#include "a4csl/quat.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace a4csl {

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

using Json = nlohmann::json;

GoldenNum parse_golden(const std::string& text);
QuatK parse_quat(const std::string& text);
/// Parses a quaternion and certifies icosian membership.
Icosian parse_icosian(const std::string& text);

Json to_json(const Int& x);
Int int_from_json(const Json& j);
Json to_json(const GoldenNum& x);
GoldenNum golden_from_json(const Json& j);
Json to_json(const QuatK& q);
QuatK quat_from_json(const Json& j);
/// o-coordinates over the icosian basis.
Json to_json(const Icosian& q);
Icosian icosian_from_json(const Json& j);
/// Row-major nested arrays.
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json to_json(const RatMatrix& m);
/// {"hnf", "index", "basis"}; basis holds the ambient quaternions.
Json to_json(const Sublattice4& s);
Sublattice4 sublattice_from_json(const Json& j);
Json to_json(const RightIdealLabel& l);

/// Everything known about the rotation generated by q: sigma, denominator,
/// alpha, CSL and (optionally) the rotation matrix.
Json rotation_report(const Icosian& q, Orientation o = Orientation::proper);
Json to_json(const EnumerationShell& shell, bool with_members = true);

/// Column header used in coefficient tables.
const char* column_name(CoeffKind k);
/// CSV with header "m,<col>,...", one row per index; absent values are empty.
std::string coefficients_csv(const std::vector<DirichletCoeffs>& columns);
Json coefficients_json(const std::vector<DirichletCoeffs>& columns);
/// Fixed-width text table.
std::string coefficients_table(const std::vector<DirichletCoeffs>& columns);

}  // namespace a4csl
