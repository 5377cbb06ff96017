#include <doctest.h>

#include <algorithm>
#include <map>

#include "artinqp/io.hpp"
#include "artinqp/qpdecide.hpp"

using namespace artinqp;

namespace {

// Brute-force oracle: a graph is QP iff the vertex set splits into parts,
// pairwise fully joined by label-2 edges, each part inducing Kbar, a segment
// with label >= 4, or T(4,4,2).
bool part_ok(const LabeledGraph& g, const std::vector<std::string>& part) {
  LabeledGraph f = v_subgraph(g, part);
  FactorKind k = classify_factor(f);
  return k.tag != FactorKind::Other;
}

bool cross_ok(const LabeledGraph& g, const std::vector<std::string>& a,
              const std::vector<std::string>& b) {
  for (const auto& x : a)
    for (const auto& y : b) {
      auto l = g.label(x, y);
      if (!l || *l != 2) return false;
    }
  return true;
}

bool brute_force_qp(const LabeledGraph& g) {
  const auto& vs = g.vertices();
  size_t n = vs.size();
  if (n == 0) return true;
  // Enumerate set partitions via restricted growth strings.
  std::vector<int> a(n, 0);
  while (true) {
    int parts = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<std::string>> blocks(parts);
    for (size_t i = 0; i < n; ++i) blocks[a[i]].push_back(vs[i]);
    bool ok = true;
    for (int i = 0; i < parts && ok; ++i) {
      if (!part_ok(g, blocks[i])) ok = false;
      for (int j = i + 1; j < parts && ok; ++j)
        if (!cross_ok(g, blocks[i], blocks[j])) ok = false;
    }
    if (ok) return true;
    // next restricted growth string
    int i = static_cast<int>(n) - 1;
    while (i > 0) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, a[j]);
      if (a[i] <= mx) {
        ++a[i];
        for (size_t j = i + 1; j < n; ++j) a[j] = 0;
        break;
      }
      --i;
    }
    if (i == 0) return false;
  }
}

LabeledGraph relabel(const LabeledGraph& g, const std::map<std::string, std::string>& f) {
  LabeledGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(f.at(v));
  for (const auto& [e, l] : g.edges()) out.add_edge(f.at(e.first), f.at(e.second), l);
  return validate_graph(out);
}

}  // namespace

TEST_CASE("decide_qp: positive cases") {
  CHECK(decide_qp(t442()).qp);
  CHECK(decide_qp(kbar(4)).qp);
  CHECK(decide_qp(segment(8)).qp);
  for (int l = 2; l <= 3; ++l) CHECK(decide_qp(triangle(2 * l, 2, 2)).qp);
  Verdict v = decide_qp(two_join(segment(6), make_graph({"x", "y"}, {})));
  CHECK(v.qp);
  REQUIRE(v.factors.size() == 2);
  CHECK(v.factors[0] == FactorKind{FactorKind::Segment, 0, 6});
  CHECK(v.factors[1] == FactorKind{FactorKind::Kbar, 2, 0});
}

TEST_CASE("decide_qp: negative cases carry the right pattern") {
  Verdict t444 = decide_qp(triangle(4, 4, 4));
  CHECK(!t444.qp);
  CHECK(t444.pattern.tag == PatternKind::Tri2_T444);
  REQUIRE(t444.witness.has_value());

  Verdict t642 = decide_qp(triangle(6, 4, 2));
  CHECK(!t642.qp);
  CHECK(t642.pattern.tag == PatternKind::Tri1);
  CHECK(t642.pattern.r == 3);
  CHECK(t642.pattern.k == 2);
  CHECK(t642.pattern.l == 1);

  // path u-v-w labels 4,4: non-complete strictly even
  LabeledGraph path = make_graph({"u", "v", "w"}, {{"u", "v", 4}, {"v", "w", 4}});
  Verdict vp = decide_qp(path);
  CHECK(!vp.qp);
  CHECK(vp.pattern.tag == PatternKind::NonCompleteStrictlyEven);
  CHECK(!vp.witness.has_value());
}

TEST_CASE("fig-teo5 graphs are NOT QP with quad patterns") {
  LabeledGraph a = make_graph({"u", "w1", "w2", "w3"},
                              {{"u", "w1", 4}, {"u", "w2", 4}, {"u", "w3", 4},
                               {"w1", "w2", 2}, {"w1", "w3", 2}, {"w2", "w3", 2}});
  LabeledGraph b = make_graph({"u", "v", "w1", "w2"},
                              {{"u", "v", 2}, {"u", "w1", 4}, {"u", "w2", 4},
                               {"v", "w1", 4}, {"v", "w2", 2}, {"w1", "w2", 2}});
  LabeledGraph c = make_graph({"u", "v", "w1", "w2"},
                              {{"u", "v", 2}, {"u", "w1", 4}, {"u", "w2", 4},
                               {"v", "w1", 4}, {"v", "w2", 4}, {"w1", "w2", 2}});
  Verdict va = decide_qp(a);
  CHECK(!va.qp);
  CHECK(va.pattern.tag == PatternKind::Quad_a);
  Verdict vb = decide_qp(b);
  CHECK(!vb.qp);
  CHECK(vb.pattern.tag == PatternKind::Quad_b);
  Verdict vc = decide_qp(c);
  CHECK(!vc.qp);
  CHECK(vc.pattern.tag == PatternKind::Quad_c);
  for (const Verdict* v : {&va, &vb, &vc}) CHECK(v->witness.has_value());
}

TEST_CASE("agreement with the brute-force oracle on 3-vertex graphs") {
  // all label choices {absent,2,4,6} over the 3 possible edges
  for (int c0 = 0; c0 < 4; ++c0)
    for (int c1 = 0; c1 < 4; ++c1)
      for (int c2 = 0; c2 < 4; ++c2) {
        std::vector<std::tuple<std::string, std::string, int>> edges;
        if (c0) edges.emplace_back("a", "b", 2 * c0);
        if (c1) edges.emplace_back("a", "c", 2 * c1);
        if (c2) edges.emplace_back("b", "c", 2 * c2);
        LabeledGraph g = make_graph({"a", "b", "c"}, edges);
        CHECK(decide_qp(g).qp == brute_force_qp(g));
      }
}

TEST_CASE("verdict is invariant under relabeling") {
  std::vector<LabeledGraph> gs = {
      triangle(6, 4, 2),
      triangle(4, 4, 4),
      t442(),
      make_graph({"a", "b", "c", "d"},
                 {{"a", "b", 4}, {"a", "c", 4}, {"a", "d", 4}, {"b", "c", 2},
                  {"b", "d", 2}, {"c", "d", 2}}),
      make_graph({"a", "b", "c", "d", "e"},
                 {{"a", "b", 6}, {"a", "c", 2}, {"a", "d", 2}, {"a", "e", 2},
                  {"b", "c", 2}, {"b", "d", 2}, {"b", "e", 2}, {"c", "d", 4},
                  {"c", "e", 4}, {"d", "e", 2}}),
  };
  std::vector<std::string> pool = {"p", "q", "r", "s", "t"};
  for (const auto& g : gs) {
    bool base = decide_qp(g).qp;
    std::vector<std::string> perm = pool;
    perm.resize(g.vertices().size());
    std::sort(perm.begin(), perm.end());
    do {
      std::map<std::string, std::string> f;
      for (size_t i = 0; i < perm.size(); ++i) f[g.vertices()[i]] = perm[i];
      CHECK(decide_qp(relabel(g, f)).qp == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("2-join closure: QP x QP stays QP") {
  std::vector<LabeledGraph> qps = {t442(), segment(6, "p", "q"),
                                   make_graph({"x", "y"}, {})};
  for (size_t i = 0; i < qps.size(); ++i)
    for (size_t j = 0; j < qps.size(); ++j) {
      if (i == j) continue;
      bool collide = false;
      for (const auto& v : qps[i].vertices())
        if (qps[j].has_vertex(v)) collide = true;
      if (collide) continue;
      CHECK(decide_qp(two_join(qps[i], qps[j])).qp);
    }
}

TEST_CASE("every tabulated witness passes verification") {
  std::vector<LabeledGraph> gs = {
      triangle(4, 4, 4),    // Tri2
      triangle(6, 4, 2),    // Tri1 (3,2,1): index-3 subgroup at the (6,2) vertex
      triangle(6, 4, 4),    // Tri1 (3,2,2): index-3 subgroup at the (6,4) vertex
      triangle(6, 6, 2),    // Tri1 (3,3,*)
      triangle(6, 6, 6),    // Tri1 (3,3,3)
      triangle(8, 4, 2),    // Tri1 r>=4, w copies collapse mod 2
      triangle(8, 6, 4),    // Tri1 r>=4, w copies collapse completely
      triangle(8, 8, 2),    // Tri1 r>=4, no collapse
      make_graph({"u", "w1", "w2", "w3"},
                 {{"u", "w1", 4}, {"u", "w2", 4}, {"u", "w3", 4}, {"w1", "w2", 2},
                  {"w1", "w3", 2}, {"w2", "w3", 2}}),  // quad (a)
      make_graph({"u", "v", "w1", "w2"},
                 {{"u", "v", 2}, {"u", "w1", 4}, {"u", "w2", 4}, {"v", "w1", 4},
                  {"v", "w2", 2}, {"w1", "w2", 2}}),  // quad (b)
      make_graph({"u", "v", "w1", "w2"},
                 {{"u", "v", 2}, {"u", "w1", 4}, {"u", "w2", 4}, {"v", "w1", 4},
                  {"v", "w2", 4}, {"w1", "w2", 2}}),  // quad (c)
  };
  for (const auto& g : gs) {
    auto [v, rep] = decide_and_verify(g);
    CHECK(!v.qp);
    REQUIRE(rep.has_value());
    INFO("graph hash ", graph_hash(g), " reason: ", rep->reason);
    CHECK(rep->pass);
  }
}

TEST_CASE("supergraph extension: witness still verifies with pinned variables") {
  // T(4,4,4) joined to an extra vertex by even edges (label 4 keeps it one factor).
  LabeledGraph g = make_graph({"a", "b", "c", "d"},
                              {{"a", "b", 4}, {"a", "c", 4}, {"b", "c", 4},
                               {"a", "d", 4}, {"b", "d", 2}, {"c", "d", 2}});
  auto [v, rep] = decide_and_verify(g);
  CHECK(!v.qp);
  REQUIRE(rep.has_value());
  INFO("reason: ", rep->reason);
  CHECK(rep->pass);
}

TEST_CASE("scanner coverage: every 5-vertex {2,4}-complete graph decides cleanly") {
  // All label assignments over the 10 edges of K5 with labels in {2,4}:
  // every Other factor must match some forbidden pattern (no internal error),
  // and the verdict must agree with the brute-force oracle.
  std::vector<std::string> names = {"a", "b", "c", "d", "e"};
  for (long code = 0; code < (1 << 10); ++code) {
    std::vector<std::tuple<std::string, std::string, int>> edges;
    int bit = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        edges.emplace_back(names[i], names[j], (code >> bit++ & 1) ? 4 : 2);
    LabeledGraph g = make_graph(names, edges);
    Verdict v = decide_qp(g);
    CHECK(v.qp == brute_force_qp(g));
    if (!v.qp && v.witness) {
      CHECK(v.witness->k >= 2);
    }
  }
}

TEST_CASE("scanner coverage: deterministic sample of 5/6-vertex even graphs") {
  unsigned long long state = 0xfeedfacecafebeefull;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  std::vector<std::string> names = {"a", "b", "c", "d", "e", "f"};
  for (int rep = 0; rep < 1200; ++rep) {
    int n = 5 + static_cast<int>(next() % 2);
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int c = static_cast<int>(next() % 4);  // absent, 2, 4, 6
        if (c) edges.emplace_back(names[i], names[j], 2 * c);
      }
    std::vector<std::string> vs(names.begin(), names.begin() + n);
    LabeledGraph g = make_graph(vs, edges);
    Verdict v = decide_qp(g);  // must not throw
    CHECK(v.qp == brute_force_qp(g));
  }
}
