#ifndef ARTINQP_FOX_HPP
#define ARTINQP_FOX_HPP

#include <string>
#include <vector>

#include "artinqp/poly.hpp"
#include "artinqp/presentation.hpp"

namespace artinqp {

// Abelianized Fox derivative d(w)/d(g) in the variables of `ab`, computed
// left-to-right from d(uv) = du + phi(u) dv, d(a)/d(a) = 1, d(a^-1)/d(a) = -t_a^-1.
LaurentPoly fox_derivative(const Word& w, const std::string& g, const Abelianization& ab);

// All derivatives of one word in a single pass, indexed by generator.
std::vector<LaurentPoly> fox_row(const Word& w, const Abelianization& ab);

enum class FoxAWrt { A, B, Other };

// Closed form for the classical Artin relation A_ell(a,b):
//   -(t_b - 1) p_ell(t_a t_b)  wrt a,   (t_a - 1) p_ell(t_a t_b)  wrt b,  0 otherwise.
// Variables: index `ta` and `tb` in an ambient of the given arity.
LaurentPoly fox_closed_A(int ell, int arity, int ta, int tb, FoxAWrt wrt);

// Closed form for the bracket relation B^i_{ell,k}(w, ubar) in the free
// abelianization with variables (t_{w,0},...,t_{w,k-1}, t_ubar), arity k+1.
// wrt: 0..k-1 for w_j, k for ubar; anything else yields 0.
//
// Derivation: both sides of B^i are runs of the period-(k+1) cyclic word, so
// each derivative is prefix-monomial * p_M(T) with T = t_ubar * tbar_w, M the
// occurrence count of the generator in the run:
//   dB^i/dg = pi(i, dP) p_{c+[dP<r+eps]}(T) - phi(B^i) pi(i+1, dQ) p_{c+[dQ<r+eps]}(T)
// with dP = (rho_g - i) mod (k+1), dQ = (rho_g - i - 1) mod (k+1),
// phi(B^i) = t_{w,i} / t_{w,(i+r+eps) mod (k+1)} and pi(a,d) the product of
// the d cyclic letters starting at slot a.
LaurentPoly fox_closed_B(int ell, int k, int i, int wrt);

}  // namespace artinqp

#endif
