#ifndef ARTINQP_CYCLO_HPP
#define ARTINQP_CYCLO_HPP

#include <string>
#include <vector>

#include "artinqp/numeric.hpp"

namespace artinqp {

// A root of unity zeta_order^exp in lowest terms: gcd(exp, order) = 1,
// 0 <= exp < order (so the conductor equals the multiplicative order).
struct RootOfUnity {
  long order = 1;
  long exp = 0;

  static RootOfUnity one() { return {1, 0}; }
  static RootOfUnity minus_one() { return {2, 1}; }
  static RootOfUnity make(long n, long k);  // zeta_n^k, reduced

  bool is_one() const { return order == 1; }
  RootOfUnity inverse() const { return make(order, order - exp); }
  RootOfUnity times(const RootOfUnity& o) const;
  RootOfUnity pow(long t) const;

  bool operator==(const RootOfUnity& o) const {
    return order == o.order && exp == o.exp;
  }
  bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
  bool operator<(const RootOfUnity& o) const {
    return order != o.order ? order < o.order : exp < o.exp;
  }

  std::string str() const;  // "zeta(n,k)", with "1"/"-1" shortcuts
};

// Element of the cyclotomic field Q(zeta_N), stored as rational coordinates
// in the power basis of Q[x]/Phi_N(x). Mixed-conductor arithmetic lifts both
// operands to the lcm conductor.
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, Rat(0)) {}
  explicit Cyclo(const Rat& r) : n_(1), c_(1, r) {}
  explicit Cyclo(long v) : n_(1), c_(1, Rat(v)) {}
  explicit Cyclo(const Int& v) : n_(1), c_(1, Rat(v)) {}

  static Cyclo of_root(const RootOfUnity& z);
  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(1); }

  long conductor() const { return n_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;      // lies in Q
  Rat rational_value() const;    // requires is_rational()

  Cyclo lifted(long m) const;    // image in Q(zeta_m), n_ | m

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }

  Cyclo inverse() const;  // field inverse; throws on zero

  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  std::string str() const;

 private:
  long n_;
  std::vector<Rat> c_;  // size phi(n_)
};

// N-th cyclotomic polynomial, monic with integer coefficients, low degree
// first. Cached; computed by exact division of x^N - 1 by the proper Phi_d.
const std::vector<Int>& cyclotomic_poly(long n);

// zeta_N^k as a Cyclo in the conductor-N representation (k may be any integer).
Cyclo cyclo_embed(long n, long k);

}  // namespace artinqp

#endif
