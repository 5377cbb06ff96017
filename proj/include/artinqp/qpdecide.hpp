#ifndef ARTINQP_QPDECIDE_HPP
#define ARTINQP_QPDECIDE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artinqp/charvar.hpp"
#include "artinqp/graph.hpp"

namespace artinqp {

struct PatternKind {
  enum Tag { NonCompleteStrictlyEven, Tri1, Tri2_T444, Quad_a, Quad_b, Quad_c } tag =
      NonCompleteStrictlyEven;
  // Tri1 parameters (labels 2r, 2k, 2l sorted descending).
  int r = 0, k = 0, l = 0;

  bool operator==(const PatternKind& o) const {
    return tag == o.tag && r == o.r && k == o.k && l == o.l;
  }
  std::string str() const;
};

// Injective map pattern role -> graph vertex realizing the v-subgraph.
using Embedding = std::vector<std::pair<std::string, std::string>>;

struct Verdict {
  bool qp = false;
  // QP: the finest 2-join factor list (sorted by minimal vertex).
  std::vector<FactorKind> factors;
  std::vector<LabeledGraph> factor_graphs;
  // NotQP: located pattern, embedding, and tabulated witness when available.
  PatternKind pattern;
  Embedding embedding;
  std::optional<ObstructionWitness> witness;
};

// Scan order (fixed): non-completeness, Tri1 triangles, T(4,4,4) triangles,
// then the three 4-vertex patterns. Pre: factor classifies as Other.
std::pair<PatternKind, Embedding> forbidden_pattern_scan(const LabeledGraph& factor);

// Instantiates the tabulated (u, k, I1, I2) witness for the pattern inside
// the full graph g, with all abelianization variables outside the embedded
// pattern pinned to 1. Returns nullopt for NonCompleteStrictlyEven.
std::optional<ObstructionWitness> witness_for(const PatternKind& pattern,
                                              const Embedding& embedding,
                                              const LabeledGraph& g);

// Main decision procedure: QP iff every finest 2-join factor is one of
// Kbar, S_{2l}, T(4,4,2).
Verdict decide_qp(const LabeledGraph& g);

// decide_qp plus obstruction verification of the witness, when present.
std::pair<Verdict, std::optional<ObstructionReport>> decide_and_verify(
    const LabeledGraph& g, Exec exec = Exec::Parallel);

}  // namespace artinqp

#endif
