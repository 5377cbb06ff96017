#ifndef ARTINQP_CHARVAR_HPP
#define ARTINQP_CHARVAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "artinqp/alexmatrix.hpp"
#include "artinqp/rank.hpp"
#include "artinqp/torus.hpp"

namespace artinqp {

// Exact rank of M restricted to the torus (entries evaluated through a
// parametrization, elimination over the cyclotomic function field).
int rank_on_torus(const AlexMatrix& m, const TorsionTorus& t, Exec exec = Exec::Parallel);

// All order x order minors of M, deterministic (lexicographic) order.
std::vector<LaurentPoly> fitting_minors(const AlexMatrix& m, int order,
                                        Exec exec = Exec::Parallel);

// Largest k >= 0 with t inside V_k: (columns - rank_on_torus) - 1, floored
// at 0. Columns count generators, so depth >= 1 iff all (cols-1)-minors
// vanish on t.
int charvar_depth(const AlexMatrix& m, const TorsionTorus& t, Exec exec = Exec::Parallel);

// Witness data for the characteristic-variety obstruction: two families of
// torsion-translated tori in the co-cyclic abelianization coordinates.
struct ObstructionWitness {
  std::string u;
  int k = 0;
  std::vector<TorsionTorus> tori1, tori2;
};

struct TorusReport {
  TorsionTorus torus;
  bool nonempty = false;
  int dimension = -1;
  int rank = -1, corank = -1, depth = -1;
  bool trivial_point = false;
};

struct PairReport {
  size_t i1 = 0, i2 = 0;  // indices into tori1 / tori2
  bool nonempty = false;
  int dimension = -1;
  int rank = -1, corank = -1, depth = -1;
};

struct ObstructionReport {
  bool pass = false;
  std::string reason;       // on failure: which condition broke
  std::string route;        // "C3a" or "C3b"
  int columns = 0;
  int generic_rank = 0, generic_depth = 0;
  std::vector<TorusReport> tori1, tori2;
  std::vector<PairReport> pairs;
  std::optional<PairReport> chosen_pair;
};

// Checks the three obstruction conditions on M = cocyclic_matrix(g, u, k):
// C1  every witness torus has depth >= 1, strictly above the generic depth;
// C2  some pair (t1, t2) from the two lists meets in dimension >= 1;
// C3a that pair's intersection depth exceeds max(depth t1, depth t2), or
// C3b both lists are single (distinct) irreducible tori.
ObstructionReport verify_obstruction(const LabeledGraph& g, const ObstructionWitness& w,
                                     Exec exec = Exec::Parallel);

}  // namespace artinqp

#endif
