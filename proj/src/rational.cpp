#include "tvt/rational.hpp"

#include <cctype>

namespace tvt {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(Integer(num)) / Integer(den);
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  const std::string den_part =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  auto check = [](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("malformed rational literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational literal");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw std::invalid_argument("malformed rational literal: " + s);
  };
  check(num_part);
  check(den_part);
  Integer num(num_part);
  Integer den(den_part);
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num) / den;
}

std::string rational_to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string rational_to_decimal(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  Integer num = numerator(value);
  const Integer den = denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Integer scaled = (num * scale * 2 + den) / (den * 2);  // round half up
  const Integer whole = scaled / scale;
  const Integer frac = scaled % scale;
  std::string out = whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
  }
  if (negative && scaled != 0) out = "-" + out;
  return out;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace tvt
