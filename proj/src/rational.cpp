#include "frusta/rational.hpp"

#include <ostream>

namespace frusta {

namespace {

BigInt pow10(int n) {
  BigInt p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Rational::Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(BigInt num, BigInt den) {
  if (den == 0) throw Error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  value_ = Backend(std::move(num), std::move(den));  // cpp_rational reduces
}

Rational Rational::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&] { throw Error("rational: cannot parse \"" + std::string(original) + "\""); };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) fail();

  auto parse_digits = [&](std::string_view s) -> BigInt {
    if (s.empty()) fail();
    for (char c : s)
      if (c < '0' || c > '9') fail();
    return BigInt(std::string(s));
  };

  BigInt num, den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_digits(text.substr(0, slash));
    den = parse_digits(text.substr(slash + 1));
    if (den == 0) fail();
  } else {
    num = parse_digits(text);
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

Rational& Rational::operator/=(const Rational& r) {
  if (r.is_zero()) throw Error("rational: division by zero");
  value_ /= r.value_;
  return *this;
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

std::string Rational::decimal(int places) const {
  if (places < 0) places = 0;
  const BigInt n = boost::multiprecision::abs(numerator());
  const BigInt d = denominator();
  const BigInt scale = pow10(places);
  // round half away from zero
  const BigInt scaled = (n * scale * 2 + d) / (d * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string out = sign() < 0 && scaled != 0 ? "-" : "";
  out += whole.str();
  if (places > 0) {
    std::string f = frac.str();
    out += '.';
    out += std::string(places - f.size(), '0');
    out += f;
  }
  return out;
}

std::string Rational::decimal_significant(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  const BigInt n = boost::multiprecision::abs(numerator());
  const BigInt d = denominator();
  // e = digit count before the point (<= 0 for values below 1):
  // normalize so that 10^(e-1) * d <= n < 10^e * d
  auto pow_le = [&](int k) { return k >= 0 ? pow10(k) * d <= n : d <= n * pow10(-k); };
  int e = static_cast<int>(n.str().size()) - static_cast<int>(d.str().size());
  while (pow_le(e)) ++e;
  while (!pow_le(e - 1)) --e;
  const int places = digits - e;
  std::string out;
  if (places <= 0) {
    // value rounds to a multiple of a positive power of ten
    const BigInt unit = pow10(-places);
    const BigInt du = d * unit;
    const BigInt rounded = (n * 2 + du) / (du * 2) * unit;
    out = rounded.str();
  } else {
    out = decimal(places);
    if (sign() < 0) out = out.substr(1);
    if (out.find('.') != std::string::npos) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
  }
  return (sign() < 0 ? "-" : "") + out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace frusta
