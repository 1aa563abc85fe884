#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "delzant/error.hpp"

namespace delzant {

using BigInt = mpz_class;

/// Exact rational scalar. Always canonical: gcd(|num|, den) = 1, den > 0.
/// All geometry in this library is carried out on these; doubles appear only
/// at reporting boundaries.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}                    // NOLINT(runtime/explicit)
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT
  Rational(const BigInt& n) : q_(n) {}          // NOLINT(runtime/explicit)
  Rational(const BigInt& num, const BigInt& den);
  Rational(int num, int den) : Rational(BigInt(num), BigInt(den)) {}

  static Rational from_mpq(const mpq_class& q) {
    Rational r;
    r.q_ = q;
    return r;
  }

  const mpq_class& raw() const { return q_; }
  BigInt numerator() const { return BigInt(q_.get_num()); }
  BigInt denominator() const { return BigInt(q_.get_den()); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  Rational operator-() const { return from_mpq(-q_); }
  Rational operator+(const Rational& o) const { return from_mpq(q_ + o.q_); }
  Rational operator-(const Rational& o) const { return from_mpq(q_ - o.q_); }
  Rational operator*(const Rational& o) const { return from_mpq(q_ * o.q_); }
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return q_ == o.q_; }
  bool operator!=(const Rational& o) const { return q_ != o.q_; }
  bool operator<(const Rational& o) const { return q_ < o.q_; }
  bool operator<=(const Rational& o) const { return q_ <= o.q_; }
  bool operator>(const Rational& o) const { return q_ > o.q_; }
  bool operator>=(const Rational& o) const { return q_ >= o.q_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;
  /// Accepts "p", "p/q", and plain integer text with optional sign.
  static Rational parse(const std::string& text);

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using LatticeVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

std::string to_string(const LatticeVector& v);
std::string to_string(const RationalVector& v);

/// Three-way lexicographic comparison; vectors of unequal length compare by
/// length first so sorting is total.
int lex_compare(const LatticeVector& a, const LatticeVector& b);
int lex_compare(const RationalVector& a, const RationalVector& b);

RationalVector to_rational(const LatticeVector& v);

}  // namespace delzant
