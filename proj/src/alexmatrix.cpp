#include "artinqp/alexmatrix.hpp"

#include <stdexcept>

namespace artinqp {

AlexMatrix alexander_matrix(const Presentation& p, const Abelianization& ab) {
  if (ab.generators != p.generators)
    throw std::invalid_argument("alexander_matrix: abelianization does not match presentation");
  AlexMatrix m;
  m.col_names = p.generators;
  m.var_names = ab.var_names;
  for (const auto& rel : p.relators) {
    m.row_info.push_back(rel);
    m.entries.push_back(fox_row(rel.word(), ab));
  }
  return m;
}

AlexMatrix artin_matrix(const LabeledGraph& g) {
  Presentation p = artin_presentation(g);
  return alexander_matrix(p, abelianize(p));
}

AlexMatrix cocyclic_matrix(const LabeledGraph& g, const std::string& u, int k) {
  Presentation p = cocyclic_presentation(g, u, k);
  Abelianization ab = abelianize(p);
  AlexMatrix m = alexander_matrix(p, ab);

  // Row blocks follow the construction order of cocyclic_presentation.
  BlockMap& b = m.blocks;
  int row = 0;
  auto take_while = [&](auto pred) {
    RowRange r{row, row};
    while (row < m.rows() && pred(m.row_info[row])) ++row;
    r.end = row;
    return r;
  };
  b.a_k = take_while([](const Relator& r) { return r.sub == CocyclicASub::R2_VV; });
  for (int j = 0; j < k; ++j)
    b.per_coset.push_back(take_while([&](const Relator& r) {
      return (r.sub == CocyclicASub::R3_VW || r.sub == CocyclicASub::R4_WW) &&
             r.coset == j;
    }));
  b.r1 = take_while([](const Relator& r) { return r.sub == CocyclicASub::R1_VU; });
  while (row < m.rows()) {
    if (m.row_info[row].tag != RelatorTag::CocyclicB)
      throw std::logic_error("cocyclic_matrix: unexpected row order");
    std::string w = m.row_info[row].edge_b;
    RowRange r = take_while([&](const Relator& rel) {
      return rel.tag == RelatorTag::CocyclicB && rel.edge_b == w;
    });
    b.b_blocks.emplace_back(w, r);
  }

  // Column groups: W copies per coset, then V_{2,u}, then ubar (generator order).
  std::vector<std::string> v2u = g.neighbors_with_label(u, 2);
  int wcount = static_cast<int>(g.vertices().size()) - 1 - static_cast<int>(v2u.size());
  int col = 0;
  for (int j = 0; j < k; ++j) {
    std::vector<int> group;
    for (int t = 0; t < wcount; ++t) group.push_back(col++);
    b.w_cols.push_back(std::move(group));
  }
  for (size_t t = 0; t < v2u.size(); ++t) b.v2u_cols.push_back(col++);
  b.ubar_col = col;
  return m;
}

}  // namespace artinqp
