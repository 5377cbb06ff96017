#ifndef ARTINQP_NUMERIC_HPP
#define ARTINQP_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace artinqp {

// Exact scalars. Minors of products of p_l factors overflow fixed width
// quickly, so coefficients are arbitrary precision throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long lcm_long(long a, long b) {
  long g = a, h = b;
  while (h != 0) {
    long t = g % h;
    g = h;
    h = t;
  }
  return a / g * b;
}

// Euclidean mod with result in [0, m).
inline long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace artinqp

#endif
