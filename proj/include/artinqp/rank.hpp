#ifndef ARTINQP_RANK_HPP
#define ARTINQP_RANK_HPP

#include <vector>

#include "artinqp/poly.hpp"
#include "artinqp/ratfunc.hpp"
#include "artinqp/torus.hpp"

namespace artinqp {

// Kernel selection. Parallel and Serial must produce identical results;
// Serial is the reference implementation kept for testing and benchmarks.
enum class Exec { Serial, Parallel };

// Exact division helpers for the Bareiss pivots.
Int coeff_divexact(const Int& a, const Int& b);
Cyclo coeff_divexact(const Cyclo& a, const Cyclo& b);

// Exact polynomial division (remainder must vanish); graded-lex long division.
template <class C>
SparsePoly<C> poly_divexact(const SparsePoly<C>& num, const SparsePoly<C>& den);

// Rank of a polynomial matrix over the fraction field of the coefficient
// ring, by fraction-free Bareiss elimination. Mutates a copy.
int bareiss_rank(std::vector<std::vector<LaurentPoly>> m, Exec exec = Exec::Parallel);
int bareiss_rank(std::vector<std::vector<CPoly>> m, Exec exec = Exec::Parallel);

// Determinant of a square polynomial matrix (Bareiss).
LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m);

// Generic rank over the ambient function field (no substitution).
int generic_rank(const std::vector<std::vector<LaurentPoly>>& m,
                 Exec exec = Exec::Parallel);

// Rank after substituting a parametrization of the torus into every entry,
// over the cyclotomic rational-function field. Exact; throws on empty torus.
int rank_on_parametrization(const std::vector<std::vector<LaurentPoly>>& m,
                            const TorusParametrization& p, Exec exec = Exec::Parallel);

// All order x order minors, rows/column index sets in lexicographic order.
std::vector<LaurentPoly> all_minors(const std::vector<std::vector<LaurentPoly>>& m,
                                    int order, Exec exec = Exec::Parallel);

}  // namespace artinqp

#endif
