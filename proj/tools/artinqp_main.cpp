// Command-line front end: graph/torus parsing and one subcommand per
// pipeline stage. Exit codes: 0 success (QP for `decide`), 3 NOT QP,
// 2 invalid input.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "artinqp/charvar.hpp"
#include "artinqp/io.hpp"
#include "artinqp/qpdecide.hpp"
#include "artinqp/rank.hpp"

using namespace artinqp;

namespace {

struct CocyclicOpt {
  std::vector<std::string> args;  // <vertex> <k>
  bool set() const { return args.size() == 2; }
  std::string vertex() const { return args[0]; }
  int k() const { return std::stoi(args[1]); }
};

int run_present(const std::string& file, const CocyclicOpt& co) {
  LabeledGraph g = parse_graph_file(file);
  Presentation p = co.set() ? cocyclic_presentation(g, co.vertex(), co.k())
                            : artin_presentation(g);
  std::cout << print_presentation(p);
  return 0;
}

int run_alexander(const std::string& file, const CocyclicOpt& co, bool json) {
  LabeledGraph g = parse_graph_file(file);
  AlexMatrix m = co.set() ? cocyclic_matrix(g, co.vertex(), co.k()) : artin_matrix(g);
  if (json) {
    nlohmann::json j;
    j["variables"] = m.var_names;
    j["columns"] = m.col_names;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : m.entries) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& e : row) r.push_back(render_poly(e));
      rows.push_back(r);
    }
    j["entries"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print_matrix(m);
  }
  return 0;
}

int run_rank(const std::string& file, const CocyclicOpt& co, const std::string& torus_file) {
  LabeledGraph g = parse_graph_file(file);
  AlexMatrix m = co.set() ? cocyclic_matrix(g, co.vertex(), co.k()) : artin_matrix(g);
  int cols = m.cols();
  int vars = static_cast<int>(m.var_names.size());
  int grank = rank_on_torus(m, TorsionTorus::full(vars));
  std::cout << "generic rank " << grank << " (columns " << cols << ", corank "
            << cols - grank << ")\n";
  if (!torus_file.empty()) {
    std::vector<TorsionTorus> tori = parse_torus_file(torus_file, vars);
    for (size_t i = 0; i < tori.size(); ++i) {
      TorusCanonical c = torus_canonicalize(tori[i]);
      std::cout << "torus " << i + 1 << ": ";
      if (!c.nonempty) {
        std::cout << "empty torus\n";
        continue;
      }
      int r = rank_on_torus(m, tori[i]);
      int depth = std::max(0, cols - r - 1);
      std::cout << "dim " << c.dimension << ", rank " << r << ", corank " << cols - r
                << ", depth " << depth;
      if (c.is_trivial_point) std::cout << " (trivial character)";
      std::cout << "\n";
    }
  }
  return 0;
}

int run_decide(const std::string& file, bool verify, bool json, const std::string& cert_out) {
  LabeledGraph g = parse_graph_file(file);
  Verdict v;
  std::optional<ObstructionReport> rep;
  if (verify) {
    auto pr = decide_and_verify(g);
    v = std::move(pr.first);
    rep = std::move(pr.second);
  } else {
    v = decide_qp(g);
  }
  if (json) {
    std::cout << certificate_json(g, v, rep);
  } else if (v.qp) {
    std::cout << "QP:";
    if (v.factors.empty()) std::cout << " (empty graph)";
    for (size_t i = 0; i < v.factors.size(); ++i) {
      std::cout << (i ? " *2 " : " ") << v.factors[i].str();
    }
    std::cout << "\n";
  } else {
    std::cout << "NOT QP (" << v.pattern.str() << " pattern; at";
    for (const auto& [role, vert] : v.embedding) std::cout << " " << role << "=" << vert;
    std::cout << ")";
    if (rep) {
      std::cout << "; witness " << (rep->pass ? "verified" : "FAILED") << ": coranks ";
      for (size_t i = 0; i < rep->tori1.size(); ++i)
        std::cout << (i ? "," : "") << rep->tori1[i].corank;
      std::cout << " | ";
      for (size_t i = 0; i < rep->tori2.size(); ++i)
        std::cout << (i ? "," : "") << rep->tori2[i].corank;
      if (rep->chosen_pair)
        std::cout << " -> " << rep->chosen_pair->corank
                  << "; dim(cap)=" << rep->chosen_pair->dimension << " [" << rep->route
                  << "]";
      if (!rep->pass) std::cout << "; reason: " << rep->reason;
    } else if (v.witness) {
      std::cout << "; witness available (run with --verify)";
    } else {
      std::cout << "; no tabulated witness for this pattern";
    }
    std::cout << "\n";
  }
  if (!cert_out.empty()) {
    std::ofstream out(cert_out);
    out << certificate_json(g, v, rep);
  }
  return v.qp ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quasi-projectivity engine for even Artin groups"};
  app.require_subcommand(1);

  std::string file, torus_file, cert_file, cert_out;
  CocyclicOpt co;
  bool json = false, verify = false;

  auto add_cocyclic = [&](CLI::App* cmd) {
    cmd->add_option("--cocyclic", co.args, "co-cyclic subgroup: <vertex> <k>")
        ->expected(2);
  };

  auto* present = app.add_subcommand("present", "print the (co-cyclic) presentation");
  present->add_option("graph", file, "graph file")->required();
  add_cocyclic(present);

  auto* alexander = app.add_subcommand("alexander", "print the Alexander matrix");
  alexander->add_option("graph", file, "graph file")->required();
  add_cocyclic(alexander);
  alexander->add_flag("--json", json, "machine-readable nested-array dump");

  auto* rank = app.add_subcommand("rank", "generic rank and rank on tori");
  rank->add_option("graph", file, "graph file")->required();
  add_cocyclic(rank);
  rank->add_option("--torus", torus_file, "torus constraint file");

  auto* decide = app.add_subcommand("decide", "decide quasi-projectivity");
  decide->add_option("graph", file, "graph file")->required();
  decide->add_flag("--verify", verify, "verify the obstruction witness");
  decide->add_flag("--json", json, "emit a certificate");
  decide->add_option("--cert", cert_out, "write certificate JSON to a file");

  auto* recheck = app.add_subcommand("recheck", "re-verify a stored certificate");
  recheck->add_option("certificate", cert_file, "certificate JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (present->parsed()) return run_present(file, co);
    if (alexander->parsed()) return run_alexander(file, co, json);
    if (rank->parsed()) return run_rank(file, co, torus_file);
    if (decide->parsed()) return run_decide(file, verify, json, cert_out);
    if (recheck->parsed()) {
      std::ifstream in(cert_file);
      if (!in) throw std::runtime_error("cannot open '" + cert_file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      std::string diag = recheck_certificate(ss.str());
      if (diag.empty()) {
        std::cout << "certificate verified\n";
        return 0;
      }
      std::cout << diag << "\n";
      return 5;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
