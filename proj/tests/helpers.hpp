#pragma once

#include "tvt/config.hpp"

#include <initializer_list>
#include <vector>

namespace tvt::test {

inline Rational q(long long num, long long den = 1) { return make_rational(num, den); }

inline Point pt(std::initializer_list<long long> coords) {
  Point p;
  for (long long c : coords) p.push_back(Rational(c));
  return p;
}

}  // namespace tvt::test
