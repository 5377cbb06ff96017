#ifndef ARTINQP_POLY_HPP
#define ARTINQP_POLY_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "artinqp/numeric.hpp"

namespace artinqp {

// Exponent vector of a monomial; one slot per ambient variable, negative
// exponents allowed (Laurent).
using ExpVec = std::vector<int>;

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec exp_neg(const ExpVec& a) {
  ExpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline long exp_total(const ExpVec& a) {
  long t = 0;
  for (int e : a) t += e;
  return t;
}

// Graded lexicographic order: total degree first, then lex.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const {
    long ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta < tb;
    return a < b;
  }
};

// Sparse multivariate (Laurent) polynomial with coefficients in C.
// Invariant: no zero coefficients stored; equal values iff equal term maps.
template <class C>
class SparsePoly {
 public:
  using Terms = std::map<ExpVec, C, GradedLexLess>;

  SparsePoly() : arity_(0) {}
  explicit SparsePoly(int arity) : arity_(arity) {}

  static SparsePoly zero(int arity) { return SparsePoly(arity); }

  static SparsePoly constant(int arity, C c) {
    SparsePoly p(arity);
    p.add_term(ExpVec(arity, 0), std::move(c));
    return p;
  }

  static SparsePoly monomial(int arity, ExpVec e, C c) {
    if (static_cast<int>(e.size()) != arity)
      throw std::invalid_argument("monomial exponent arity mismatch");
    SparsePoly p(arity);
    p.add_term(std::move(e), std::move(c));
    return p;
  }

  static SparsePoly variable(int arity, int idx, C one) {
    ExpVec e(arity, 0);
    e.at(idx) = 1;
    return monomial(arity, std::move(e), std::move(one));
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  bool is_monomial() const { return terms_.size() == 1; }

  // The unique term of a monomial.
  const std::pair<const ExpVec, C>& only_term() const {
    if (!is_monomial()) throw std::invalid_argument("not a monomial");
    return *terms_.begin();
  }

  void add_term(ExpVec e, C c) {
    if (c == C()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(std::move(e), std::move(c));
    } else {
      it->second += c;
      if (it->second == C()) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_arity(b);
    SparsePoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        C c = ca * cb;
        r.add_term(exp_add(ea, eb), std::move(c));
      }
    return r;
  }

  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  // Multiply by the monomial x^e (unit in the Laurent ring).
  SparsePoly shifted(const ExpVec& e) const {
    SparsePoly r(arity_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(exp_add(m, e), c);
    return r;
  }

  SparsePoly pow(long n) const {
    if (n < 0) throw std::invalid_argument("negative power of a polynomial");
    SparsePoly r = constant(arity_, unit_coeff());
    SparsePoly base = *this;
    while (n > 0) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  bool operator==(const SparsePoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  // Leading term in graded lex order.
  const std::pair<const ExpVec, C>& leading() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of zero");
    return *terms_.rbegin();
  }

  // Component-wise minimum exponent over all terms (0 vector if zero poly).
  ExpVec min_exponents() const {
    ExpVec m(arity_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (first) {
        m = e;
        first = false;
      } else {
        for (int i = 0; i < arity_; ++i)
          if (e[i] < m[i]) m[i] = e[i];
      }
    }
    return m;
  }

 private:
  C unit_coeff() const { return C(1); }
  void check_arity(const SparsePoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
  }

  int arity_;
  Terms terms_;
};

// The ambient coefficient ring Z[Z^r]: integer multivariate Laurent polynomials.
using LaurentPoly = SparsePoly<Int>;

// p_l(m) = 1 + m + ... + m^(l-1) for a single monomial m; p_0 = 0, p_1 = 1.
inline LaurentPoly p_poly(long l, const LaurentPoly& m) {
  if (l < 0) throw std::invalid_argument("p_poly: l must be >= 0");
  if (!m.is_monomial()) throw std::invalid_argument("p_poly: argument is not a monomial");
  LaurentPoly r(m.arity());
  LaurentPoly acc = LaurentPoly::constant(m.arity(), Int(1));
  for (long j = 0; j < l; ++j) {
    r += acc;
    acc *= m;
  }
  return r;
}

std::string render_poly(const LaurentPoly& p,
                        const std::vector<std::string>& var_names);
std::string render_poly(const LaurentPoly& p);  // variables named t0, t1, ...

}  // namespace artinqp

#endif
