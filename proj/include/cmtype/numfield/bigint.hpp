#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cmtype {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int isqrt_floor(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
  if (n < 0) return false;
  Int r = isqrt_floor(n);
  return r * r == n;
}

inline int sign_of(const Int& n) { return n > 0 ? 1 : n < 0 ? -1 : 0; }

}  // namespace cmtype
