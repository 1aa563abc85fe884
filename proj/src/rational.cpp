#include "delzant/rational.hpp"

#include <ostream>
#include <sstream>

namespace delzant {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::ChopTooLarge: return "ChopTooLarge";
    case ErrorCode::UnsupportedInput: return "UnsupportedInput";
    case ErrorCode::UnsupportedCone: return "UnsupportedCone";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::InvalidFan: return "InvalidFan";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Cancelled: return "Cancelled";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw Error(ErrorCode::InternalInconsistency, "division by zero");
  return from_mpq(q_ / o.q_);
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "cannot parse rational: " + text);
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

int lex_compare(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

int lex_compare(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& e : v) out.emplace_back(e);
  return out;
}

}  // namespace delzant
