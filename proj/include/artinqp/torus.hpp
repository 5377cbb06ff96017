#ifndef ARTINQP_TORUS_HPP
#define ARTINQP_TORUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "artinqp/cyclo.hpp"
#include "artinqp/poly.hpp"
#include "artinqp/ratfunc.hpp"

namespace artinqp {

// One binomial condition prod x_i^(a_i) = z with z a root of unity.
struct TorusConstraint {
  ExpVec expo;
  RootOfUnity torsion;

  bool operator==(const TorusConstraint& o) const {
    return expo == o.expo && torsion == o.torsion;
  }
};

// Torsion-translated subtorus of (C*)^n in implicit binomial form.
// Canonicalization puts the constraint lattice in Hermite normal form with
// the torsion character carried along; emptiness shows up as a relation
// 1 = z with z != 1.
class TorsionTorus {
 public:
  TorsionTorus() = default;
  explicit TorsionTorus(int ambient) : ambient_(ambient) {}
  static TorsionTorus full(int ambient) { return TorsionTorus(ambient); }

  int ambient() const { return ambient_; }
  const std::vector<TorusConstraint>& constraints() const { return constraints_; }

  void add_constraint(ExpVec e, RootOfUnity z);
  void add_constraint(const std::string& line, int ambient_hint = -1);  // text grammar

  bool operator==(const TorsionTorus& o) const;  // compares canonical forms

  std::string str() const;  // one constraint per line, canonical form

 private:
  int ambient_ = 0;
  std::vector<TorusConstraint> constraints_;
};

struct TorusCanonical {
  bool nonempty = true;
  int dimension = 0;
  TorsionTorus canonical;  // HNF constraint rows (empty torus: as collected)
  bool is_trivial_point = false;  // the singleton {(1,...,1)}
};

TorusCanonical torus_canonicalize(const TorsionTorus& t);

// Rational parametrization with dim(t) free parameters; throws on empty tori.
TorusParametrization torus_parametrize(const TorsionTorus& t);

// Union of constraint lists, canonicalized.
TorsionTorus torus_intersect(const TorsionTorus& a, const TorsionTorus& b);

// Component tori of p_l(x^a) = 0: {x^a = zeta_l^j}, j = 1..l-1.
std::vector<TorsionTorus> solve_pl_constraint(long l, const ExpVec& a, int ambient);

// Text grammar: "t0*t1 = zeta(2,1)", exponents "t0^-1*t2^3", rhs also 1 / -1.
TorusConstraint parse_torus_constraint(const std::string& line, int ambient);
std::string render_torus_constraint(const TorusConstraint& c);

}  // namespace artinqp

#endif
