#ifndef ARTINQP_ALEXMATRIX_HPP
#define ARTINQP_ALEXMATRIX_HPP

#include <string>
#include <utility>
#include <vector>

#include "artinqp/fox.hpp"
#include "artinqp/graph.hpp"
#include "artinqp/poly.hpp"
#include "artinqp/presentation.hpp"

namespace artinqp {

// Half-open row range [begin, end).
struct RowRange {
  int begin = 0, end = 0;
  bool empty() const { return begin >= end; }
};

// Named row/column ranges of the block structure of a co-cyclic Alexander
// matrix: the A_k block, the per-coset (A'_j | A_j) blocks, the commutator
// rows [v, ubar], and one M_B block per edge at u.
struct BlockMap {
  RowRange a_k;                       // R2 rows
  std::vector<RowRange> per_coset;    // R3+R4 rows for each coset j
  RowRange r1;                        // commutator rows
  std::vector<std::pair<std::string, RowRange>> b_blocks;  // per W-vertex

  std::vector<std::vector<int>> w_cols;  // generator columns of w_{*,j} per j
  std::vector<int> v2u_cols;
  int ubar_col = -1;
};

// Alexander matrix of a presentation: one row per relator, one column per
// generator, entries in the (identified) abelianization variables.
struct AlexMatrix {
  std::vector<std::string> col_names;   // generator names
  std::vector<std::string> var_names;   // abelianization variables (entry arity)
  std::vector<Relator> row_info;
  std::vector<std::vector<LaurentPoly>> entries;
  BlockMap blocks;

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return static_cast<int>(col_names.size()); }
};

AlexMatrix alexander_matrix(const Presentation& p, const Abelianization& ab);

// Alexander matrix of the standard co-cyclic presentation, block map filled
// in; rows in block order (A_k, per-coset, commutators, B blocks).
AlexMatrix cocyclic_matrix(const LabeledGraph& g, const std::string& u, int k);

// Artin presentation matrix (rows ordered by edge, columns by vertex).
AlexMatrix artin_matrix(const LabeledGraph& g);

}  // namespace artinqp

#endif
