#include "a4csl/io.hpp"

#include <cctype>
#include <iomanip>
#include <limits>
#include <sstream>

namespace a4csl {

namespace {

class GoldenParser {
 public:
  explicit GoldenParser(std::string_view s) : s_(s) {}

  GoldenNum parse() {
    GoldenNum v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse \"" + std::string(s_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == '(';
  }

  GoldenNum expr() {
    GoldenNum v = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  GoldenNum term() {
    GoldenNum v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        const GoldenNum d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  GoldenNum unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  GoldenNum power() {
    GoldenNum base = primary();
    if (peek() != '^') return base;
    ++pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    const std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    const int e = std::stoi(digits);
    if (neg && base.is_zero()) fail("negative power of zero");
    return base.pow(neg ? -e : e);
  }

  GoldenNum primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      GoldenNum v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 't') {
      if (s_.substr(pos_, 3) == "tau")
        pos_ += 3;
      else
        ++pos_;
      return GoldenNum::tau();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return GoldenNum(GoldenInt(Int(std::string(s_.substr(start, pos_ - start)))));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GoldenNum parse_golden(const std::string& text) { return GoldenParser(text).parse(); }

QuatK parse_quat(const std::string& raw) {
  std::string text = trim(raw);
  if (text.empty() || (text.back() != ')' && text.back() != ']')) throw ParseError("quaternion literal must end with ')'");
  const char close = text.back();
  const char open = close == ')' ? '(' : '[';
  // Find the bracket matching the final one.
  int depth = 0;
  std::size_t start = std::string::npos;
  for (std::size_t i = text.size(); i-- > 0;) {
    if (text[i] == close) ++depth;
    if (text[i] == open && --depth == 0) {
      start = i;
      break;
    }
  }
  if (start == std::string::npos) throw ParseError("unbalanced brackets in \"" + text + "\"");
  const std::string body = text.substr(start + 1, text.size() - start - 2);
  std::vector<std::string> parts;
  depth = 0;
  std::string cur;
  for (const char c : body) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4) throw ParseError("quaternion literal needs four components: \"" + text + "\"");
  std::array<GoldenNum, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = parse_golden(parts[i]);
  QuatK q(c[0], c[1], c[2], c[3]);

  std::string prefix = trim(text.substr(0, start));
  if (!prefix.empty() && prefix.back() == '*') prefix = trim(prefix.substr(0, prefix.size() - 1));
  if (!prefix.empty()) q = parse_golden(prefix) * q;
  return q;
}

Icosian parse_icosian(const std::string& text) {
  const QuatK q = parse_quat(text);
  const auto m = membership(q);
  if (!m) throw DomainError("not an icosian: " + q.to_string());
  return *m;
}

Json to_json(const Int& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(x.convert_to<long long>());
  return Json(x.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json to_json(const GoldenNum& x) { return x.to_string(); }

GoldenNum golden_from_json(const Json& j) {
  if (j.is_number_integer()) return GoldenNum(GoldenInt(Int(j.get<long long>())));
  if (!j.is_string()) throw ParseError("expected a golden number string, got " + j.dump());
  return parse_golden(j.get<std::string>());
}

Json to_json(const QuatK& q) {
  Json a = Json::array();
  for (const auto& c : q.coords()) a.push_back(to_json(c));
  return a;
}

QuatK quat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("expected a four-element array, got " + j.dump());
  return {golden_from_json(j[0]), golden_from_json(j[1]), golden_from_json(j[2]), golden_from_json(j[3])};
}

Json to_json(const Icosian& q) {
  Json a = Json::array();
  for (const auto& c : q.ocoords()) a.push_back(c.to_string());
  return a;
}

Icosian icosian_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("expected four o-coordinates, got " + j.dump());
  std::array<GoldenInt, 4> c;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto g = golden_from_json(j[i]).to_golden_int();
    if (!g) throw ParseError("o-coordinate is not integral: " + j[i].dump());
    c[i] = *g;
  }
  return Icosian::from_ocoords(c);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("expected a nested integer array");
  IntMatrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw ParseError("ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = int_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::ostringstream os;
      os << m(i, j);
      row.push_back(os.str());
    }
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const Sublattice4& s) {
  Json basis = Json::array();
  for (const auto& v : s.ambient_basis()) basis.push_back(to_json(v));
  return {{"hnf", to_json(s.hnf)}, {"index", to_json(s.index)}, {"basis", basis}};
}

Sublattice4 sublattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("hnf")) throw ParseError("expected an object with an \"hnf\" field");
  Sublattice4 s = sublattice_from_generators(matrix_from_json(j.at("hnf")));
  if (j.contains("index") && int_from_json(j.at("index")) != s.index) throw ParseError("index does not match the HNF");
  return s;
}

Json to_json(const RightIdealLabel& l) { return to_json(l.hnf); }

Json rotation_report(const Icosian& q, Orientation o) {
  const auto [content_factor, prim] = primitive_part(q);
  const CoincidenceRotation rot = make_rotation(prim, o);
  const ExtensionPair ext = extension(prim);
  Json j;
  j["q"] = to_json(q.value());
  j["primitive"] = to_json(prim.value());
  j["content"] = content_factor.to_string();
  j["orientation"] = o == Orientation::proper ? "proper" : "improper";
  j["nr"] = prim.nr().to_string();
  j["sigma"] = to_json(rot.sigma);
  j["denominator"] = to_json(rot.denominator);
  j["alpha"] = ext.alpha.to_string();
  j["q_alpha"] = to_json(ext.q_alpha.value());
  j["csl"] = to_json(csl(prim));
  j["rotation_matrix"] = to_json(rotation_matrix(rot));
  return j;
}

Json to_json(const EnumerationShell& shell, bool with_members) {
  Json j;
  j["m"] = shell.m;
  j["ideal_count"] = shell.ideal_count();
  j["rotation_count"] = shell.rotation_count();
  j["f_rot"] = to_json(f_rot(shell.m));
  if (shell.csls_computed) j["csl_count"] = shell.csls.size();
  Json parts = Json::array();
  for (const auto& p : shell.parts)
    parts.push_back({{"delta", p.delta.to_string()}, {"vectors", p.vectors}, {"ideals", p.ideals}});
  j["norms"] = parts;
  if (with_members) {
    Json reps = Json::array();
    for (const auto& q : shell.representatives) reps.push_back(to_json(q.value()));
    j["representatives"] = reps;
    if (shell.csls_computed) {
      Json cs = Json::array();
      for (const auto& c : shell.csls) cs.push_back(to_json(c));
      j["csls"] = cs;
    }
  }
  return j;
}

const char* column_name(CoeffKind k) {
  switch (k) {
    case CoeffKind::rot: return "f_rot_formula";
    case CoeffKind::brute_rot: return "f_rot_bruteforce";
    case CoeffKind::brute: return "f_bruteforce";
    case CoeffKind::known: return "f_known";
  }
  return "?";
}

std::string coefficients_csv(const std::vector<DirichletCoeffs>& columns) {
  std::ostringstream os;
  os << "m";
  for (const auto& c : columns) os << ',' << column_name(c.kind);
  os << '\n';
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  for (std::size_t m = 1; m <= n; ++m) {
    os << m;
    for (const auto& c : columns) {
      os << ',';
      if (const auto& v = c(m)) os << *v;
    }
    os << '\n';
  }
  return os.str();
}

Json coefficients_json(const std::vector<DirichletCoeffs>& columns) {
  Json j = Json::object();
  for (const auto& c : columns) {
    Json vals = Json::array();
    for (const auto& v : c.values) vals.push_back(v ? to_json(*v) : Json(nullptr));
    j[column_name(c.kind)] = vals;
  }
  return j;
}

std::string coefficients_table(const std::vector<DirichletCoeffs>& columns) {
  std::ostringstream os;
  os << std::setw(6) << "m";
  for (const auto& c : columns) os << std::setw(18) << column_name(c.kind);
  os << '\n';
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  for (std::size_t m = 1; m <= n; ++m) {
    os << std::setw(6) << m;
    for (const auto& c : columns) os << std::setw(18) << (c(m) ? c(m)->str() : std::string("-"));
    os << '\n';
  }
  return os.str();
}

}  // namespace a4csl
