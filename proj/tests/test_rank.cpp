#include <doctest.h>

#include <random>

#include "artinqp/charvar.hpp"
#include "artinqp/io.hpp"
#include "artinqp/qpdecide.hpp"

using namespace artinqp;

namespace {

TorsionTorus from_lines(int ambient, std::initializer_list<const char*> lines) {
  TorsionTorus t(ambient);
  for (const char* l : lines) {
    TorusConstraint c = parse_torus_constraint(l, ambient);
    t.add_constraint(c.expo, c.torsion);
  }
  return t;
}

LaurentPoly random_poly(std::mt19937& rng, int arity, int terms) {
  LaurentPoly p(arity);
  std::uniform_int_distribution<int> ce(-3, 3);
  std::uniform_int_distribution<int> ee(-2, 2);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(arity);
    for (int i = 0; i < arity; ++i) e[i] = ee(rng);
    p.add_term(e, Int(ce(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("bareiss rank: small integer matrices") {
  auto c = [](int v) { return LaurentPoly::constant(0, Int(v)); };
  std::vector<std::vector<LaurentPoly>> m = {{c(1), c(2)}, {c(2), c(4)}};
  CHECK(bareiss_rank(m) == 1);
  std::vector<std::vector<LaurentPoly>> id = {{c(1), c(0)}, {c(0), c(1)}};
  CHECK(bareiss_rank(id) == 2);
  std::vector<std::vector<LaurentPoly>> z = {{c(0), c(0)}};
  CHECK(bareiss_rank(z) == 0);
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(31337);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<std::vector<LaurentPoly>> m(5, std::vector<LaurentPoly>(4));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, 3, 3);
    CHECK(bareiss_rank(m, Exec::Serial) == bareiss_rank(m, Exec::Parallel));
    CHECK(all_minors(m, 2, Exec::Serial) == all_minors(m, 2, Exec::Parallel));
  }
}

TEST_CASE("generic rank of Artin matrices is |V| - 1 (connected)") {
  std::vector<LabeledGraph> gs = {segment(4), t442(), triangle(4, 4, 4),
                                  triangle(6, 4, 2),
                                  make_graph({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 6}})};
  for (const auto& g : gs) {
    AlexMatrix m = artin_matrix(g);
    CHECK(generic_rank(m.entries) == static_cast<int>(g.vertices().size()) - 1);
  }
}

TEST_CASE("rank on the full torus equals generic rank (dual routes)") {
  std::vector<LabeledGraph> gs = {t442(), triangle(4, 4, 4), triangle(6, 4, 2)};
  for (const auto& g : gs) {
    AlexMatrix m = artin_matrix(g);
    int vars = static_cast<int>(m.var_names.size());
    CHECK(rank_on_torus(m, TorsionTorus::full(vars)) == generic_rank(m.entries));
  }
  for (const auto& g : gs)
    for (const auto& u : g.vertices()) {
      AlexMatrix m = cocyclic_matrix(g, u, 2);
      int vars = static_cast<int>(m.var_names.size());
      CHECK(rank_on_torus(m, TorsionTorus::full(vars)) == generic_rank(m.entries));
    }
}

TEST_CASE("monotonicity: more constraints never raise the rank") {
  AlexMatrix m = artin_matrix(t442());
  TorsionTorus t1 = from_lines(3, {"t0*t1 = -1"});
  TorsionTorus t2 = from_lines(3, {"t0*t1 = -1", "t2 = 1"});
  CHECK(rank_on_torus(m, t2) <= rank_on_torus(m, t1));
  CHECK(rank_on_torus(m, t1) <= rank_on_torus(m, TorsionTorus::full(3)));
}

TEST_CASE("minor/rank consistency on small matrices") {
  std::mt19937 rng(555);
  for (int rep = 0; rep < 6; ++rep) {
    std::vector<std::vector<LaurentPoly>> m(4, std::vector<LaurentPoly>(4));
    for (auto& row : m)
      for (auto& e : row) e = random_poly(rng, 2, 2);
    int r = bareiss_rank(m);
    for (int order = 1; order <= 4; ++order) {
      bool all_zero = true;
      for (const auto& d : all_minors(m, order))
        if (!d.is_zero()) all_zero = false;
      // rank <= order-1 iff every order x order minor vanishes
      CHECK(all_zero == (r <= order - 1));
    }
  }
}

TEST_CASE("fitting_minors: order 1 lists the entries; bad orders throw") {
  AlexMatrix m = artin_matrix(t442());
  auto minors1 = fitting_minors(m, 1);
  CHECK(minors1.size() == 9);
  CHECK(minors1[0] == m.entries[0][0]);
  CHECK_THROWS_AS(fitting_minors(m, 4), std::out_of_range);
  CHECK_THROWS_AS(fitting_minors(m, 0), std::out_of_range);
}

TEST_CASE("fitting minor of the T(4,4,2) matrix: rows {1,3}, cols {2,3}") {
  AlexMatrix m = artin_matrix(t442());
  std::vector<std::vector<LaurentPoly>> sub = {{m.entries[0][1], m.entries[0][2]},
                                               {m.entries[2][1], m.entries[2][2]}};
  LaurentPoly det = bareiss_det(sub);
  // (t0 t1 + 1)(t0 - 1)(t1 - 1)
  LaurentPoly t0 = LaurentPoly::variable(3, 0, Int(1));
  LaurentPoly t1 = LaurentPoly::variable(3, 1, Int(1));
  LaurentPoly one = LaurentPoly::constant(3, Int(1));
  CHECK(det == (t0 * t1 + one) * (t0 - one) * (t1 - one));
}

TEST_CASE("charvar_depth: generic is 0, zero matrix caps at columns-1") {
  AlexMatrix m = artin_matrix(t442());
  CHECK(charvar_depth(m, TorsionTorus::full(3)) == 0);
  AlexMatrix z = m;
  for (auto& row : z.entries)
    for (auto& e : row) e = LaurentPoly(3);
  CHECK(charvar_depth(z, TorsionTorus::full(3)) == 2);
}

TEST_CASE("corank of co-cyclic matrices is at most 1 (connected graphs)") {
  std::mt19937 rng(2718);
  std::vector<std::string> names = {"a", "b", "c", "d"};
  std::uniform_int_distribution<int> pick(0, 3);  // absent, 2, 4, 6
  int tested = 0;
  while (tested < 25) {
    int n = 3 + static_cast<int>(rng() % 2);
    LabeledGraph g;
    {
      std::vector<std::tuple<std::string, std::string, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          int c = pick(rng);
          if (c > 0) edges.emplace_back(names[i], names[j], 2 * c);
        }
      std::vector<std::string> vs(names.begin(), names.begin() + n);
      g = make_graph(vs, edges);
    }
    // connectivity via decompose of the underlying adjacency
    bool connected = true;
    {
      std::vector<std::string> seen = {g.vertices()[0]};
      for (size_t i = 0; i < seen.size(); ++i)
        for (const auto& nb : g.neighbors(seen[i]))
          if (std::find(seen.begin(), seen.end(), nb) == seen.end()) seen.push_back(nb);
      connected = seen.size() == g.vertices().size();
    }
    if (!connected) continue;
    ++tested;
    std::uniform_int_distribution<int> kpick(2, 4);
    int k = kpick(rng);
    const std::string& u = g.vertices()[rng() % g.vertices().size()];
    AlexMatrix m = cocyclic_matrix(g, u, k);
    int r = generic_rank(m.entries);
    CHECK(m.cols() - r <= 1);
  }
}

TEST_CASE("B-block has maximal rank k; rank 1 on the AnPA1 torus") {
  for (int k = 2; k <= 4; ++k)
    for (int ell = 2; ell <= 8; ++ell) {
      LabeledGraph g = segment(2 * ell, "u", "w");
      AlexMatrix m = cocyclic_matrix(g, "u", k);
      REQUIRE(m.rows() == k);  // the whole matrix is the B block here
      CHECK(generic_rank(m.entries) == k);
      if (ell % k == 0) {
        // rank 1 over {t_ubar * tbar_w = 1}
        int vars = static_cast<int>(m.var_names.size());
        ExpVec e(vars, 0);
        for (int v = 0; v < vars; ++v) e[v] = 1;  // all copies survive: gcd = k
        TorsionTorus t(vars);
        t.add_constraint(e, RootOfUnity::one());
        CHECK(rank_on_torus(m, t) == 1);
      }
    }
}

TEST_CASE("disconnected base graph: block structure, corank can exceed 1") {
  LabeledGraph g = make_graph({"u", "w"}, {});
  AlexMatrix m = cocyclic_matrix(g, "u", 2);
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 3);
}
