// Exact rational scalars and small dense vectors used throughout the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tvt {

using Integer = boost::multiprecision::cpp_int;

// Always stored reduced with positive denominator; every operation is exact.
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an internal consistency check fails (a library defect, never
// a bad input).
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

Rational make_rational(long long num, long long den = 1);

// Accepts "p", "p/q" and "-p/q"; normalizes sign and reduces.
Rational parse_rational(const std::string& text);

// Emits "p/q" in lowest terms with q > 0 (integers come out as "p/1").
std::string rational_to_string(const Rational& value);

// Fixed-digit decimal approximation, rounded half away from zero.
// Deterministic by construction (no floating point involved).
std::string rational_to_decimal(const Rational& value, int digits);

using Vec = std::vector<Rational>;
using Point = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

Integer factorial(int n);

}  // namespace tvt
