#ifndef ARTINQP_GRAPH_HPP
#define ARTINQP_GRAPH_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace artinqp {

enum class GraphErrorKind {
  OddLabel,
  LabelTooSmall,
  Loop,
  DuplicateEdge,
  DanglingEndpoint,
  NameCollision,
  UnknownVertex,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

// Simple graph with even edge labels m_e >= 2; vertex names are opaque
// strings, canonical order lexicographic. Immutable once validated.
class LabeledGraph {
 public:
  using Edge = std::pair<std::string, std::string>;  // normalized: first < second

  LabeledGraph() = default;

  // Raw construction; call validate_graph to canonicalize and check.
  void add_vertex(const std::string& name) { raw_vertices_.push_back(name); }
  void add_edge(const std::string& a, const std::string& b, int label) {
    raw_edges_.push_back({a, b, label});
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::map<Edge, int>& edges() const { return edges_; }

  bool has_vertex(const std::string& v) const;
  // Label of edge {a,b}, or nullopt if not adjacent.
  std::optional<int> label(const std::string& a, const std::string& b) const;

  std::vector<std::string> neighbors(const std::string& v) const;
  // Neighbors of v joined by an edge with the given label.
  std::vector<std::string> neighbors_with_label(const std::string& v, int l) const;

  bool is_complete() const;
  bool is_right_angled() const;  // all labels 2

  bool operator==(const LabeledGraph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

  friend LabeledGraph validate_graph(const LabeledGraph& g);

 private:
  struct RawEdge {
    std::string a, b;
    int label;
  };

  std::vector<std::string> vertices_;  // sorted, unique (canonical)
  std::map<Edge, int> edges_;          // canonical
  std::vector<std::string> raw_vertices_;
  std::vector<RawEdge> raw_edges_;
};

// Canonicalizes (sorted vertices, normalized edge pairs) or throws GraphError
// with a distinct diagnostic per defect.
LabeledGraph validate_graph(const LabeledGraph& g);

// Convenience builders (already validated).
LabeledGraph make_graph(const std::vector<std::string>& vertices,
                        const std::vector<std::tuple<std::string, std::string, int>>& edges);
LabeledGraph kbar(int r);  // r isolated vertices a, b, c, ...
LabeledGraph segment(int label, const std::string& a = "a", const std::string& b = "b");
LabeledGraph triangle(int lab_ab, int lab_ac, int lab_bc);  // vertices a,b,c
LabeledGraph t442();

// Union of both graphs plus all cross edges labeled 2.
LabeledGraph two_join(const LabeledGraph& g1, const LabeledGraph& g2);

// Induced subgraph on `keep`, labels preserved.
LabeledGraph v_subgraph(const LabeledGraph& g, const std::vector<std::string>& keep);

// Finest 2-join factorization: components of the relation "x ~ y iff NOT
// (x,y adjacent with label exactly 2)", as induced subgraphs, sorted by
// minimal vertex name. Iterating two_join over the factors reproduces g.
std::vector<LabeledGraph> join_decompose(const LabeledGraph& g);

struct FactorKind {
  enum Tag { Kbar, Segment, T442, Other } tag = Other;
  int r = 0;      // Kbar: vertex count
  int label = 0;  // Segment: edge label (>= 4)

  bool operator==(const FactorKind& o) const {
    return tag == o.tag && r == o.r && label == o.label;
  }
  std::string str() const;
};

// Classification of a single join_decompose factor.
FactorKind classify_factor(const LabeledGraph& g);

}  // namespace artinqp

#endif
