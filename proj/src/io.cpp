#include "artinqp/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "artinqp/rank.hpp"

namespace artinqp {

const char* kToolVersion = "artinqp 1.0.0";

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

LabeledGraph parse_graph(std::istream& in) {
  LabeledGraph g;
  std::string line;
  int lineno = 0;
  std::vector<std::tuple<int, std::string, std::string, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    if (kw == "vertex") {
      std::string name;
      if (!(ls >> name)) throw ParseError(lineno, "vertex: missing name");
      g.add_vertex(name);
    } else if (kw == "edge") {
      std::string a, b;
      long label;
      if (!(ls >> a >> b >> label)) throw ParseError(lineno, "edge: expected <a> <b> <label>");
      edges.emplace_back(lineno, a, b, static_cast<int>(label));
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
  }
  // Validate edge by edge so diagnostics carry line numbers.
  LabeledGraph acc = validate_graph(g);
  for (const auto& [ln, a, b, label] : edges) {
    acc.add_edge(a, b, label);
    try {
      acc = validate_graph(acc);
    } catch (const GraphError& e) {
      throw ParseError(ln, e.what());
    }
  }
  return acc;
}

LabeledGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

std::string print_graph(const LabeledGraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertices()) os << "vertex " << v << "\n";
  for (const auto& [e, l] : g.edges())
    os << "edge " << e.first << " " << e.second << " " << l << "\n";
  return os.str();
}

std::vector<TorsionTorus> parse_torus_file(std::istream& in, int ambient) {
  std::vector<TorsionTorus> out;
  TorsionTorus cur(ambient);
  bool any = false;
  std::string line;
  int lineno = 0;
  auto flush = [&] {
    if (any) out.push_back(cur);
    cur = TorsionTorus(ambient);
    any = false;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty()) {
      flush();
      continue;
    }
    if (s[0] == '#') continue;
    try {
      TorusConstraint c = parse_torus_constraint(s, ambient);
      cur.add_constraint(c.expo, c.torsion);
      any = true;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  flush();
  return out;
}

std::vector<TorsionTorus> parse_torus_file(const std::string& path, int ambient) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open torus file '" + path + "'");
  return parse_torus_file(in, ambient);
}

namespace {

std::string tag_str(const Relator& r) {
  switch (r.tag) {
    case RelatorTag::ArtinA:
      return "[A " + r.edge_a + "," + r.edge_b + "]";
    case RelatorTag::CocyclicA: {
      std::string s = "[A";
      switch (r.sub) {
        case CocyclicASub::R1_VU:
          s += "1";
          break;
        case CocyclicASub::R2_VV:
          s += "2";
          break;
        case CocyclicASub::R3_VW:
          s += "3";
          break;
        case CocyclicASub::R4_WW:
          s += "4";
          break;
        default:
          break;
      }
      s += " " + r.edge_a + "," + r.edge_b;
      if (r.coset >= 0) s += " j=" + std::to_string(r.coset);
      return s + "]";
    }
    case RelatorTag::CocyclicB:
      return "[B " + r.edge_a + "," + r.edge_b + " i=" + std::to_string(r.coset) + "]";
    case RelatorTag::Other:
      return "[R j=" + std::to_string(r.coset) + "]";
  }
  return "[?]";
}

}  // namespace

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (const auto& g : p.generators) os << " " << g;
  os << "\n";
  for (const auto& r : p.relators) {
    os << tag_str(r) << " " << r.lhs.str() << " = "
       << (r.rhs.empty() ? "1" : r.rhs.str()) << "\n";
  }
  return os.str();
}

std::string print_matrix(const AlexMatrix& m) {
  std::ostringstream os;
  os << "# variables:";
  for (size_t i = 0; i < m.var_names.size(); ++i)
    os << " t" << i << "=" << m.var_names[i];
  os << "\n# columns:";
  for (const auto& c : m.col_names) os << " " << c;
  os << "\n";
  if (m.rows() == 0) {
    os << "(0 relators: empty matrix with " << m.cols() << " columns)\n";
    return os.str();
  }
  std::vector<std::vector<std::string>> cells(m.rows());
  std::vector<size_t> width(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::string s = render_poly(m.entries[i][j]);
      width[j] = std::max(width[j], s.size());
      cells[i].push_back(std::move(s));
    }
  }
  for (int i = 0; i < m.rows(); ++i) {
    os << "[ ";
    for (int j = 0; j < m.cols(); ++j) {
      os << std::setw(static_cast<int>(width[j])) << cells[i][j];
      if (j + 1 < m.cols()) os << "  ";
    }
    os << " ] " << tag_str(m.row_info[i]) << "\n";
  }
  return os.str();
}

std::string graph_hash(const LabeledGraph& g) {
  std::string s = print_graph(g);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

namespace {

nlohmann::json torus_json(const TorsionTorus& t) {
  nlohmann::json j = nlohmann::json::array();
  TorusCanonical c = torus_canonicalize(t);
  const TorsionTorus& src = c.nonempty ? c.canonical : t;
  for (const auto& con : src.constraints()) j.push_back(render_torus_constraint(con));
  return j;
}

nlohmann::json report_json(const ObstructionReport& rep) {
  nlohmann::json j;
  j["pass"] = rep.pass;
  j["route"] = rep.route;
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  j["columns"] = rep.columns;
  j["generic_rank"] = rep.generic_rank;
  j["generic_depth"] = rep.generic_depth;
  auto tori = [&](const std::vector<TorusReport>& list) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& t : list) {
      nlohmann::json e;
      e["dimension"] = t.dimension;
      e["rank"] = t.rank;
      e["corank"] = t.corank;
      e["depth"] = t.depth;
      a.push_back(e);
    }
    return a;
  };
  j["tori1"] = tori(rep.tori1);
  j["tori2"] = tori(rep.tori2);
  if (rep.chosen_pair) {
    nlohmann::json e;
    e["i1"] = rep.chosen_pair->i1;
    e["i2"] = rep.chosen_pair->i2;
    e["dimension"] = rep.chosen_pair->dimension;
    e["rank"] = rep.chosen_pair->rank;
    e["corank"] = rep.chosen_pair->corank;
    j["intersection"] = e;
  }
  return j;
}

}  // namespace

std::string certificate_json(const LabeledGraph& g, const Verdict& v,
                             const std::optional<ObstructionReport>& rep) {
  nlohmann::json j;
  j["tool"] = kToolVersion;
  j["input_hash"] = graph_hash(g);
  j["graph"] = print_graph(g);
  j["verdict"] = v.qp ? "QP" : "NOT_QP";
  if (v.qp) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : v.factors) fs.push_back(f.str());
    j["factors"] = fs;
  } else {
    j["pattern"] = v.pattern.str();
    nlohmann::json emb = nlohmann::json::object();
    for (const auto& [role, vert] : v.embedding) emb[role] = vert;
    j["embedding"] = emb;
    if (v.witness) {
      nlohmann::json w;
      w["u"] = v.witness->u;
      w["k"] = v.witness->k;
      nlohmann::json t1 = nlohmann::json::array(), t2 = nlohmann::json::array();
      for (const auto& t : v.witness->tori1) t1.push_back(torus_json(t));
      for (const auto& t : v.witness->tori2) t2.push_back(torus_json(t));
      w["tori1"] = t1;
      w["tori2"] = t2;
      j["witness"] = w;
    }
    if (rep) j["verification"] = report_json(*rep);
  }
  return j.dump(2) + "\n";
}

std::string recheck_certificate(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  if (j.at("verdict") == "QP") {
    // Nothing rank-valued to reproduce; re-run the decision.
    std::istringstream in(j.at("graph").get<std::string>());
    LabeledGraph g = parse_graph(in);
    Verdict v = decide_qp(g);
    if (!v.qp) return "stored verdict QP but decision is NOT_QP";
    return "";
  }
  if (!j.contains("witness")) return "NOT_QP certificate without witness";
  std::istringstream in(j.at("graph").get<std::string>());
  LabeledGraph g = parse_graph(in);
  ObstructionWitness w;
  w.u = j.at("witness").at("u").get<std::string>();
  w.k = j.at("witness").at("k").get<int>();
  AlexMatrix m = cocyclic_matrix(g, w.u, w.k);
  int ambient = static_cast<int>(m.var_names.size());
  auto load = [&](const nlohmann::json& arr) {
    std::vector<TorsionTorus> out;
    for (const auto& tj : arr) {
      TorsionTorus t(ambient);
      for (const auto& line : tj) {
        TorusConstraint c = parse_torus_constraint(line.get<std::string>(), ambient);
        t.add_constraint(c.expo, c.torsion);
      }
      out.push_back(std::move(t));
    }
    return out;
  };
  w.tori1 = load(j.at("witness").at("tori1"));
  w.tori2 = load(j.at("witness").at("tori2"));
  ObstructionReport rep = verify_obstruction(g, w);
  if (!j.contains("verification"))
    return rep.pass ? "" : "stored witness fails verification: " + rep.reason;
  nlohmann::json expect = j.at("verification");
  nlohmann::json got = report_json(rep);
  if (expect != got) {
    return "verification mismatch:\nstored: " + expect.dump() + "\nrecomputed: " + got.dump();
  }
  return "";
}

}  // namespace artinqp
