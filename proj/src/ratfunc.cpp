#include "artinqp/ratfunc.hpp"

#include <stdexcept>

namespace artinqp {

RatFunc::RatFunc(CPoly n, CPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num.arity() != den.arity()) throw std::invalid_argument("RatFunc arity mismatch");
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num = -r.num;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num * b.num, a.den * b.den);
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num * o.den == o.num * den;
}

CPoly substitute_laurent(const LaurentPoly& poly, const TorusParametrization& point) {
  if (poly.arity() != point.ambient)
    throw std::invalid_argument("substitute: arity mismatch");
  CPoly out(point.params);
  for (const auto& [e, c] : poly.terms()) {
    RootOfUnity z = RootOfUnity::one();
    ExpVec se(point.params, 0);
    for (int i = 0; i < point.ambient; ++i) {
      if (e[i] == 0) continue;
      z = z.times(point.coeff[i].pow(e[i]));
      for (int t = 0; t < point.params; ++t) se[t] += e[i] * point.expo[i][t];
    }
    Cyclo coeff = Cyclo::of_root(z) * Cyclo(c);
    out.add_term(std::move(se), std::move(coeff));
  }
  return out;
}

RatFunc substitute(const LaurentPoly& poly, const TorusParametrization& point) {
  CPoly laurent = substitute_laurent(poly, point);
  ExpVec mins = laurent.min_exponents();
  ExpVec shift(point.params, 0);
  bool need = false;
  for (int t = 0; t < point.params; ++t)
    if (mins[t] < 0) {
      shift[t] = -mins[t];
      need = true;
    }
  if (!need)
    return RatFunc(laurent, CPoly::constant(point.params, Cyclo::one()));
  return RatFunc(laurent.shifted(shift),
                 CPoly::monomial(point.params, shift, Cyclo::one()));
}

}  // namespace artinqp
