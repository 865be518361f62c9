#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "frusta/error.hpp"

namespace frusta {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision fraction, always stored reduced with a positive
// denominator. This is the only scalar type in the geometric core; nothing
// downstream ever rounds.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);
  Rational(BigInt num, BigInt den);

  // Accepts "p", "p/q" and an optional leading '-'; no whitespace.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }
  Rational abs() const { return value_ < 0 ? Rational(-value_) : *this; }

  std::string str() const;
  // Fixed-point approximation with `places` digits after the point,
  // round-half-away-from-zero. Presentation only.
  std::string decimal(int places) const;
  // Shortest plain-decimal rendering with `digits` significant digits;
  // exact values with short expansions print exactly ("1/2" -> "0.5").
  std::string decimal_significant(int digits) const;
  double to_double() const { return value_.convert_to<double>(); }

  Rational operator-() const { return Rational(-value_); }
  Rational& operator+=(const Rational& r) { value_ += r.value_; return *this; }
  Rational& operator-=(const Rational& r) { value_ -= r.value_; return *this; }
  Rational& operator*=(const Rational& r) { value_ *= r.value_; return *this; }
  Rational& operator/=(const Rational& r);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}
  Backend value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational square(const Rational& r) { return r * r; }
inline Rational cube(const Rational& r) { return r * r * r; }

}  // namespace frusta
