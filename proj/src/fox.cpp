#include "artinqp/fox.hpp"

#include <map>
#include <stdexcept>

namespace artinqp {

std::vector<LaurentPoly> fox_row(const Word& w, const Abelianization& ab) {
  int arity = ab.rank();
  size_t gens = ab.generators.size();
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < gens; ++i) index[ab.generators[i]] = i;

  std::vector<LaurentPoly> row(gens, LaurentPoly(arity));
  ExpVec phi(arity, 0);  // running image of the prefix, as a monomial exponent
  for (const auto& s : w.syllables()) {
    auto it = index.find(s.gen);
    if (it == index.end())
      throw std::invalid_argument("fox derivative: unknown generator '" + s.gen + "'");
    size_t gi = it->second;
    int var = ab.var_of_gen[gi];
    if (s.exp > 0) {
      // d(g^e) = (1 + t + ... + t^(e-1))
      ExpVec cur = phi;
      for (int t = 0; t < s.exp; ++t) {
        row[gi].add_term(cur, Int(1));
        ++cur[var];
      }
      phi[var] += s.exp;
    } else {
      // d(g^-m) = -(t^-1 + ... + t^-m)
      ExpVec cur = phi;
      for (int t = 0; t < -s.exp; ++t) {
        --cur[var];
        row[gi].add_term(cur, Int(-1));
      }
      phi[var] += s.exp;
    }
  }
  return row;
}

LaurentPoly fox_derivative(const Word& w, const std::string& g, const Abelianization& ab) {
  std::vector<LaurentPoly> row = fox_row(w, ab);
  for (size_t i = 0; i < ab.generators.size(); ++i)
    if (ab.generators[i] == g) return row[i];
  throw std::invalid_argument("fox derivative: unknown generator '" + g + "'");
}

LaurentPoly fox_closed_A(int ell, int arity, int ta, int tb, FoxAWrt wrt) {
  if (ell < 1) throw std::invalid_argument("fox_closed_A: ell must be >= 1");
  if (wrt == FoxAWrt::Other) return LaurentPoly(arity);
  ExpVec ab(arity, 0);
  ab[ta] += 1;
  ab[tb] += 1;
  LaurentPoly p = p_poly(ell, LaurentPoly::monomial(arity, ab, Int(1)));
  int self = wrt == FoxAWrt::A ? tb : ta;
  LaurentPoly factor = LaurentPoly::variable(arity, self, Int(1)) -
                       LaurentPoly::constant(arity, Int(1));
  LaurentPoly result = factor * p;
  return wrt == FoxAWrt::A ? -result : result;
}

LaurentPoly fox_closed_B(int ell, int k, int i, int wrt) {
  if (ell < 1 || k < 1) throw std::invalid_argument("fox_closed_B: bad ell or k");
  if (i < 0 || i >= k) throw std::invalid_argument("fox_closed_B: i out of range");
  int arity = k + 1;  // variables t_{w,0..k-1}, t_ubar at index k
  if (wrt < 0 || wrt > k) return LaurentPoly(arity);

  int c = ell / k, r = ell % k;
  int eps = i < k - r ? 0 : 1;
  int rho = wrt;  // slot of the generator in the cyclic alphabet

  // T = t_ubar * t_{w,0} * ... * t_{w,k-1}
  ExpVec all_one(arity, 1);
  LaurentPoly big_t = LaurentPoly::monomial(arity, all_one, Int(1));

  // pi(a, d): product of the d cyclic letters starting at slot a.
  auto prefix = [&](int a, int d) {
    ExpVec e(arity, 0);
    for (int p = a; p < a + d; ++p) ++e[mod_pos(p, k + 1)];
    return e;
  };

  int d_p = static_cast<int>(mod_pos(rho - i, k + 1));
  int d_q = static_cast<int>(mod_pos(rho - i - 1, k + 1));
  int m_p = c + (d_p < r + eps ? 1 : 0);
  int m_q = c + (d_q < r + eps ? 1 : 0);

  LaurentPoly term1 =
      LaurentPoly::monomial(arity, prefix(i, d_p), Int(1)) * p_poly(m_p, big_t);

  // phi(B^i) = t_{w,i} / t_{w,i'}
  int ip = static_cast<int>(mod_pos(i + r + eps, k + 1));
  ExpVec unit(arity, 0);
  ++unit[i];
  --unit[ip];
  LaurentPoly term2 = LaurentPoly::monomial(arity, exp_add(unit, prefix(i + 1, d_q)),
                                            Int(1)) *
                      p_poly(m_q, big_t);
  return term1 - term2;
}

}  // namespace artinqp
