#include "artinqp/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace artinqp {

bool LabeledGraph::has_vertex(const std::string& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::optional<int> LabeledGraph::label(const std::string& a, const std::string& b) const {
  Edge e = a < b ? Edge{a, b} : Edge{b, a};
  auto it = edges_.find(e);
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> LabeledGraph::neighbors(const std::string& v) const {
  std::vector<std::string> r;
  for (const auto& [e, l] : edges_) {
    (void)l;
    if (e.first == v) r.push_back(e.second);
    if (e.second == v) r.push_back(e.first);
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<std::string> LabeledGraph::neighbors_with_label(const std::string& v,
                                                            int l) const {
  std::vector<std::string> r;
  for (const auto& [e, lab] : edges_) {
    if (lab != l) continue;
    if (e.first == v) r.push_back(e.second);
    if (e.second == v) r.push_back(e.first);
  }
  std::sort(r.begin(), r.end());
  return r;
}

bool LabeledGraph::is_complete() const {
  size_t n = vertices_.size();
  return edges_.size() == n * (n - 1) / 2;
}

bool LabeledGraph::is_right_angled() const {
  for (const auto& [e, l] : edges_) {
    (void)e;
    if (l != 2) return false;
  }
  return true;
}

LabeledGraph validate_graph(const LabeledGraph& g) {
  LabeledGraph out;
  // Vertices already canonical (validated input) plus any raw additions.
  std::vector<std::string> vs = g.vertices_;
  vs.insert(vs.end(), g.raw_vertices_.begin(), g.raw_vertices_.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  out.vertices_ = vs;

  auto check_edge = [&](const std::string& a, const std::string& b, int label) {
    if (a == b) throw GraphError(GraphErrorKind::Loop, "loop at vertex '" + a + "'");
    if (!out.has_vertex(a) || !out.has_vertex(b))
      throw GraphError(GraphErrorKind::DanglingEndpoint,
                       "dangling endpoint in edge {" + a + "," + b + "}");
    if (label % 2 != 0)
      throw GraphError(GraphErrorKind::OddLabel,
                       "odd label " + std::to_string(label) + " on edge {" + a + "," + b + "}");
    if (label < 2)
      throw GraphError(GraphErrorKind::LabelTooSmall,
                       "label " + std::to_string(label) + " < 2 on edge {" + a + "," + b + "}");
    LabeledGraph::Edge e = a < b ? LabeledGraph::Edge{a, b} : LabeledGraph::Edge{b, a};
    if (out.edges_.count(e))
      throw GraphError(GraphErrorKind::DuplicateEdge,
                       "duplicate edge {" + e.first + "," + e.second + "}");
    out.edges_.emplace(e, label);
  };

  for (const auto& [e, l] : g.edges_) check_edge(e.first, e.second, l);
  for (const auto& re : g.raw_edges_) check_edge(re.a, re.b, re.label);
  return out;
}

LabeledGraph make_graph(
    const std::vector<std::string>& vertices,
    const std::vector<std::tuple<std::string, std::string, int>>& edges) {
  LabeledGraph g;
  for (const auto& v : vertices) g.add_vertex(v);
  for (const auto& [a, b, l] : edges) g.add_edge(a, b, l);
  return validate_graph(g);
}

LabeledGraph kbar(int r) {
  LabeledGraph g;
  for (int i = 0; i < r; ++i) g.add_vertex(std::string(1, static_cast<char>('a' + i)));
  return validate_graph(g);
}

LabeledGraph segment(int label, const std::string& a, const std::string& b) {
  return make_graph({a, b}, {{a, b, label}});
}

LabeledGraph triangle(int lab_ab, int lab_ac, int lab_bc) {
  return make_graph({"a", "b", "c"},
                    {{"a", "b", lab_ab}, {"a", "c", lab_ac}, {"b", "c", lab_bc}});
}

LabeledGraph t442() { return triangle(4, 4, 2); }

LabeledGraph two_join(const LabeledGraph& g1, const LabeledGraph& g2) {
  for (const auto& v : g1.vertices())
    if (g2.has_vertex(v))
      throw GraphError(GraphErrorKind::NameCollision, "vertex-name collision: '" + v + "'");
  LabeledGraph g;
  for (const auto& v : g1.vertices()) g.add_vertex(v);
  for (const auto& v : g2.vertices()) g.add_vertex(v);
  for (const auto& [e, l] : g1.edges()) g.add_edge(e.first, e.second, l);
  for (const auto& [e, l] : g2.edges()) g.add_edge(e.first, e.second, l);
  for (const auto& a : g1.vertices())
    for (const auto& b : g2.vertices()) g.add_edge(a, b, 2);
  return validate_graph(g);
}

LabeledGraph v_subgraph(const LabeledGraph& g, const std::vector<std::string>& keep) {
  for (const auto& v : keep)
    if (!g.has_vertex(v))
      throw GraphError(GraphErrorKind::UnknownVertex, "unknown vertex '" + v + "'");
  std::set<std::string> ks(keep.begin(), keep.end());
  LabeledGraph out;
  for (const auto& v : ks) out.add_vertex(v);
  for (const auto& [e, l] : g.edges())
    if (ks.count(e.first) && ks.count(e.second)) out.add_edge(e.first, e.second, l);
  return validate_graph(out);
}

std::vector<LabeledGraph> join_decompose(const LabeledGraph& g) {
  const auto& vs = g.vertices();
  size_t n = vs.size();
  // Union-find over the relation "not joined by a label-2 edge".
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      auto l = g.label(vs[i], vs[j]);
      bool h_related = !(l.has_value() && *l == 2);
      if (h_related) parent[find(i)] = find(j);
    }
  std::map<size_t, std::vector<std::string>> comps;
  for (size_t i = 0; i < n; ++i) comps[find(i)].push_back(vs[i]);
  std::vector<LabeledGraph> factors;
  for (const auto& [root, verts] : comps) {
    (void)root;
    factors.push_back(v_subgraph(g, verts));
  }
  std::sort(factors.begin(), factors.end(),
            [](const LabeledGraph& a, const LabeledGraph& b) {
              return a.vertices().front() < b.vertices().front();
            });
  return factors;
}

FactorKind classify_factor(const LabeledGraph& g) {
  FactorKind k;
  size_t n = g.vertices().size();
  if (g.edges().empty()) {
    k.tag = FactorKind::Kbar;
    k.r = static_cast<int>(n);
    return k;
  }
  if (n == 2 && g.edges().size() == 1) {
    int l = g.edges().begin()->second;
    if (l >= 4) {
      k.tag = FactorKind::Segment;
      k.label = l;
      return k;
    }
    return k;  // a lone label-2 edge never survives join_decompose anyway
  }
  if (n == 3 && g.edges().size() == 3) {
    std::multiset<int> labels;
    for (const auto& [e, l] : g.edges()) {
      (void)e;
      labels.insert(l);
    }
    if (labels == std::multiset<int>{2, 4, 4}) {
      k.tag = FactorKind::T442;
      return k;
    }
  }
  return k;
}

std::string FactorKind::str() const {
  switch (tag) {
    case Kbar:
      return "Kbar(" + std::to_string(r) + ")";
    case Segment:
      return "S_" + std::to_string(label);
    case T442:
      return "T(4,4,2)";
    case Other:
      return "Other";
  }
  return "?";
}

}  // namespace artinqp
