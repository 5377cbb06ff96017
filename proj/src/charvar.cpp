#include "artinqp/charvar.hpp"

#include <algorithm>
#include <stdexcept>

namespace artinqp {

int rank_on_torus(const AlexMatrix& m, const TorsionTorus& t, Exec exec) {
  if (t.ambient() != static_cast<int>(m.var_names.size()))
    throw std::invalid_argument("rank_on_torus: torus arity does not match matrix variables");
  TorusParametrization p = torus_parametrize(t);  // throws on empty torus
  return rank_on_parametrization(m.entries, p, exec);
}

std::vector<LaurentPoly> fitting_minors(const AlexMatrix& m, int order, Exec exec) {
  return all_minors(m.entries, order, exec);
}

int charvar_depth(const AlexMatrix& m, const TorsionTorus& t, Exec exec) {
  int r = rank_on_torus(m, t, exec);
  int d = m.cols() - r - 1;
  return d < 0 ? 0 : d;
}

namespace {

TorusReport report_torus(const AlexMatrix& m, const TorsionTorus& t, Exec exec) {
  TorusReport r;
  r.torus = t;
  TorusCanonical c = torus_canonicalize(t);
  r.nonempty = c.nonempty;
  if (!c.nonempty) return r;
  r.dimension = c.dimension;
  r.trivial_point = c.is_trivial_point;
  r.rank = rank_on_torus(m, t, exec);
  r.corank = m.cols() - r.rank;
  r.depth = r.corank - 1 < 0 ? 0 : r.corank - 1;
  return r;
}

}  // namespace

ObstructionReport verify_obstruction(const LabeledGraph& g, const ObstructionWitness& w,
                                     Exec exec) {
  if (w.tori1.empty() || w.tori2.empty())
    throw std::invalid_argument("verify_obstruction: empty witness torus list");
  AlexMatrix m = cocyclic_matrix(g, w.u, w.k);
  int vars = static_cast<int>(m.var_names.size());
  for (const auto& t : w.tori1)
    if (t.ambient() != vars)
      throw std::invalid_argument("verify_obstruction: witness arity mismatch");
  for (const auto& t : w.tori2)
    if (t.ambient() != vars)
      throw std::invalid_argument("verify_obstruction: witness arity mismatch");

  ObstructionReport rep;
  rep.columns = m.cols();
  rep.generic_rank = rank_on_torus(m, TorsionTorus::full(vars), exec);
  rep.generic_depth = std::max(0, rep.columns - rep.generic_rank - 1);

  for (const auto& t : w.tori1) rep.tori1.push_back(report_torus(m, t, exec));
  for (const auto& t : w.tori2) rep.tori2.push_back(report_torus(m, t, exec));

  // C1: every witness torus lies strictly deeper than the generic stratum.
  for (const auto& list : {&rep.tori1, &rep.tori2})
    for (const auto& tr : *list) {
      if (!tr.nonempty) {
        rep.reason = "C1: empty witness torus";
        return rep;
      }
      if (tr.trivial_point) {
        rep.reason = "C1: witness torus is the trivial character";
        return rep;
      }
      if (tr.depth < 1 || tr.depth <= rep.generic_depth) {
        rep.reason = "C1: torus depth " + std::to_string(tr.depth) +
                     " does not exceed generic depth " +
                     std::to_string(rep.generic_depth);
        return rep;
      }
    }

  // C2 + C3a: look for a pair meeting in dim >= 1 whose intersection is
  // strictly deeper than both.
  bool any_dim1 = false;
  for (size_t i = 0; i < w.tori1.size(); ++i)
    for (size_t j = 0; j < w.tori2.size(); ++j) {
      TorsionTorus inter = torus_intersect(w.tori1[i], w.tori2[j]);
      TorusCanonical c = torus_canonicalize(inter);
      PairReport pr;
      pr.i1 = i;
      pr.i2 = j;
      pr.nonempty = c.nonempty;
      if (c.nonempty) {
        pr.dimension = c.dimension;
        pr.rank = rank_on_torus(m, inter, exec);
        pr.corank = m.cols() - pr.rank;
        pr.depth = std::max(0, pr.corank - 1);
      }
      rep.pairs.push_back(pr);
      if (!pr.nonempty || pr.dimension < 1) continue;
      any_dim1 = true;
      int maxd = std::max(rep.tori1[i].depth, rep.tori2[j].depth);
      if (pr.depth > maxd && !rep.chosen_pair) {
        rep.route = "C3a";
        rep.chosen_pair = pr;
      }
    }
  if (!any_dim1) {
    rep.reason = "C2: no pair of witness tori meets in dimension >= 1";
    return rep;
  }
  if (!rep.chosen_pair) {
    // C3b: both lists are single irreducible tori; need them distinct and
    // their (already found) intersection positive-dimensional.
    if (w.tori1.size() == 1 && w.tori2.size() == 1 && !(w.tori1[0] == w.tori2[0])) {
      const PairReport& pr = rep.pairs[0];
      if (pr.nonempty && pr.dimension >= 1) {
        rep.route = "C3b";
        rep.chosen_pair = pr;
      }
    }
  }
  if (!rep.chosen_pair) {
    rep.reason = "C3: no qualifying pair (no depth jump; lists not single distinct tori)";
    return rep;
  }
  rep.pass = true;
  return rep;
}

}  // namespace artinqp
