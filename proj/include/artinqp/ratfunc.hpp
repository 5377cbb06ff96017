#ifndef ARTINQP_RATFUNC_HPP
#define ARTINQP_RATFUNC_HPP

#include <string>
#include <vector>

#include "artinqp/cyclo.hpp"
#include "artinqp/poly.hpp"

namespace artinqp {

// Polynomials in the free parameters s_1..s_d with cyclotomic coefficients.
using CPoly = SparsePoly<Cyclo>;

// Assignment of every ambient variable to c * prod s_j^(a_j) with c a root
// of unity: a rational point/parametrization of a torsion-translated torus.
struct TorusParametrization {
  int ambient = 0;                 // number of ambient variables
  int params = 0;                  // d = torus dimension
  std::vector<RootOfUnity> coeff;  // per ambient variable
  std::vector<ExpVec> expo;        // per ambient variable, length = params

  bool is_trivial_point() const {
    if (params != 0) return false;
    for (const auto& c : coeff)
      if (!c.is_one()) return false;
    return true;
  }
};

// Fraction of CPoly; denominator nonzero. Equality by cross-multiplication;
// gcd normalization is intentionally absent (only zero-testing is needed).
struct RatFunc {
  CPoly num, den;

  explicit RatFunc(int arity = 0)
      : num(CPoly::zero(arity)), den(CPoly::constant(arity, Cyclo::one())) {}
  RatFunc(CPoly n, CPoly d);

  bool is_zero() const { return num.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  bool operator==(const RatFunc& o) const;  // cross-multiplication
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
};

// Exact image of an integer Laurent polynomial under a torus parametrization;
// Laurent monomials in the parameters are cleared into num/den form.
RatFunc substitute(const LaurentPoly& poly, const TorusParametrization& point);

// Same image as a Laurent CPoly (possibly negative parameter exponents).
CPoly substitute_laurent(const LaurentPoly& poly, const TorusParametrization& point);

}  // namespace artinqp

#endif
