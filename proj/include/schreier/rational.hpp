#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schreier {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace schreier
