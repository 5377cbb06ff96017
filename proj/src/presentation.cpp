#include "artinqp/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "artinqp/lattice.hpp"

namespace artinqp {

std::string Word::str() const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) os << " ";
    os << s.gen;
    if (s.exp != 1) os << "^" << s.exp;
    first = false;
  }
  return os.str();
}

int Presentation::generator_index(const std::string& g) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == g) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator '" + g + "'");
}

bool Presentation::has_generator(const std::string& g) const {
  return std::find(generators.begin(), generators.end(), g) != generators.end();
}

std::string coset_gen(const std::string& v, int j) {
  return v + "." + std::to_string(j);
}

std::string ubar_gen(const std::string& u) { return u + "~"; }

Word artin_relator(const std::string& u, const std::string& v, int ell) {
  if (ell < 1) throw std::invalid_argument("artin_relator: ell must be >= 1");
  if (u == v) throw std::invalid_argument("artin_relator: equal generators");
  Word uv = Word::gen(u) * Word::gen(v);
  Word vu = Word::gen(v) * Word::gen(u);
  return uv.pow(ell) * vu.pow(ell).inverse();
}

Presentation artin_presentation(const LabeledGraph& g) {
  Presentation p;
  p.generators = g.vertices();
  for (const auto& [e, label] : g.edges()) {
    Relator r;
    int ell = label / 2;
    r.lhs = (Word::gen(e.first) * Word::gen(e.second)).pow(ell);
    r.rhs = (Word::gen(e.second) * Word::gen(e.first)).pow(ell);
    r.tag = RelatorTag::ArtinA;
    r.edge_a = e.first;
    r.edge_b = e.second;
    p.relators.push_back(std::move(r));
  }
  return p;
}

Word bracket_word(const std::string& x, const std::string& y, int k, int i,
                  int eps, int l) {
  if (k < 1) throw std::invalid_argument("bracket_word: k must be >= 1");
  if (l < 0 || eps < 0 || eps > 1) throw std::invalid_argument("bracket_word: bad l or eps");
  int c = l / k, r = l % k;
  long len = static_cast<long>(c) * (k + 1) + r + eps;
  Word w;
  for (long p = i; p < i + len; ++p) {
    int slot = static_cast<int>(mod_pos(p, k + 1));
    if (slot == k)
      w.append(y, 1);
    else
      w.append(coset_gen(x, slot), 1);
  }
  return w;
}

namespace {

// eps rule of the standard presentation: 0 for 0 <= i < k - r_e, else 1.
int bracket_eps(int i, int k, int r) { return i < k - r ? 0 : 1; }

Relator a_relator(const std::string& a, const std::string& b, int ell,
                  CocyclicASub sub, int coset, const std::string& ea,
                  const std::string& eb) {
  Relator r;
  r.lhs = (Word::gen(a) * Word::gen(b)).pow(ell);
  r.rhs = (Word::gen(b) * Word::gen(a)).pow(ell);
  r.tag = RelatorTag::CocyclicA;
  r.sub = sub;
  r.coset = coset;
  r.edge_a = ea;
  r.edge_b = eb;
  return r;
}

}  // namespace

Presentation cocyclic_presentation(const LabeledGraph& g, const std::string& u, int k) {
  if (!g.has_vertex(u)) throw GraphError(GraphErrorKind::UnknownVertex,
                                         "unknown vertex '" + u + "'");
  if (k < 2) throw std::invalid_argument("cocyclic_presentation: k must be >= 2");

  std::vector<std::string> v2u = g.neighbors_with_label(u, 2);
  std::vector<std::string> w;
  for (const auto& v : g.vertices())
    if (v != u && !std::binary_search(v2u.begin(), v2u.end(), v)) w.push_back(v);

  Presentation p;
  // Column order of the block layout: w_{*,0}, ..., w_{*,k-1}, V_{2,u}, ubar.
  for (int j = 0; j < k; ++j)
    for (const auto& x : w) p.generators.push_back(coset_gen(x, j));
  for (const auto& v : v2u) p.generators.push_back(v);
  p.generators.push_back(ubar_gen(u));

  auto in_v2u = [&](const std::string& v) {
    return std::binary_search(v2u.begin(), v2u.end(), v);
  };
  auto in_w = [&](const std::string& v) {
    return std::binary_search(w.begin(), w.end(), v);
  };

  // R2: edges inside V_{2,u}.
  for (const auto& [e, label] : g.edges())
    if (in_v2u(e.first) && in_v2u(e.second))
      p.relators.push_back(a_relator(e.first, e.second, label / 2,
                                     CocyclicASub::R2_VV, -1, e.first, e.second));

  // Per coset j: R3 (V_{2,u} x W copies), then R4 (edges inside W).
  for (int j = 0; j < k; ++j) {
    for (const auto& [e, label] : g.edges()) {
      std::string v, x;
      if (in_v2u(e.first) && in_w(e.second)) {
        v = e.first;
        x = e.second;
      } else if (in_v2u(e.second) && in_w(e.first)) {
        v = e.second;
        x = e.first;
      } else {
        continue;
      }
      p.relators.push_back(a_relator(v, coset_gen(x, j), label / 2,
                                     CocyclicASub::R3_VW, j, v, x));
    }
    for (const auto& [e, label] : g.edges())
      if (in_w(e.first) && in_w(e.second))
        p.relators.push_back(a_relator(coset_gen(e.first, j), coset_gen(e.second, j),
                                       label / 2, CocyclicASub::R4_WW, j, e.first,
                                       e.second));
  }

  // R1: commutators [v, ubar] for v in V_{2,u}.
  for (const auto& v : v2u) {
    Relator r = a_relator(v, ubar_gen(u), 1, CocyclicASub::R1_VU, -1, u, v);
    p.relators.push_back(std::move(r));
  }

  // B^i per edge {u,w}, w in W, i in Z_k.
  for (const auto& x : w) {
    auto lab = g.label(u, x);
    if (!lab) continue;
    int ell = *lab / 2;
    int r_e = ell % k;
    for (int i = 0; i < k; ++i) {
      int eps = bracket_eps(i, k, r_e);
      Relator r;
      r.lhs = bracket_word(x, ubar_gen(u), k, i, eps, ell);
      r.rhs = bracket_word(x, ubar_gen(u), k, i + 1, eps, ell);
      r.tag = RelatorTag::CocyclicB;
      r.coset = i;
      r.edge_a = u;
      r.edge_b = x;
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

Presentation rs_presentation_generic(const LabeledGraph& g, const std::string& u, int k) {
  if (!g.has_vertex(u)) throw GraphError(GraphErrorKind::UnknownVertex,
                                         "unknown vertex '" + u + "'");
  if (k < 2) throw std::invalid_argument("rs_presentation_generic: k must be >= 2");

  std::vector<std::string> others;
  for (const auto& v : g.vertices())
    if (v != u) others.push_back(v);

  Presentation p;
  for (int j = 0; j < k; ++j)
    for (const auto& v : others) p.generators.push_back(coset_gen(v, j));
  p.generators.push_back(ubar_gen(u));

  // Rewrite s Rel s^-1 through the Schreier transversal {1, u, ..., u^(k-1)}:
  // reading letter g at coset c emits t(u^c, g); t(u^c, u) is trivial for
  // c < k-1 and ubar at c = k-1; t(u^c, v) = v.c.
  auto rewrite = [&](const Word& conj) {
    Word out;
    int c = 0;
    for (const auto& s : conj.syllables()) {
      int step = s.exp > 0 ? 1 : -1;
      for (int t = 0; t < (s.exp > 0 ? s.exp : -s.exp); ++t) {
        if (s.gen == u) {
          if (step > 0) {
            if (c == k - 1) out.append(ubar_gen(u), 1);
            c = (c + 1) % k;
          } else {
            c = (c - 1 + k) % k;
            if (c == k - 1) out.append(ubar_gen(u), -1);
          }
        } else {
          if (step > 0) {
            out.append(coset_gen(s.gen, c), 1);
          } else {
            out.append(coset_gen(s.gen, c), -1);
          }
        }
      }
    }
    if (c != 0) throw std::logic_error("rs rewrite: word does not lie in the kernel");
    return out;
  };

  Presentation artin = artin_presentation(g);
  for (const auto& rel : artin.relators) {
    Word base = rel.word();
    for (int j = 0; j < k; ++j) {
      Word conj = Word::gen(u).pow(j) * base * Word::gen(u).pow(-j);
      Word rewritten = rewrite(conj);
      if (rewritten.empty()) continue;
      Relator r;
      r.lhs = rewritten;
      r.tag = RelatorTag::Other;
      r.coset = j;
      r.edge_a = rel.edge_a;
      r.edge_b = rel.edge_b;
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

int Abelianization::var(const std::string& gen) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == gen) return var_of_gen[i];
  throw std::invalid_argument("abelianization: unknown generator '" + gen + "'");
}

Abelianization abelianize(const Presentation& p) {
  size_t n = p.generators.size();
  std::map<std::string, int> index;
  for (size_t i = 0; i < n; ++i) index[p.generators[i]] = static_cast<int>(i);

  // Relator exponent vectors.
  std::vector<std::vector<Int>> rows;
  for (const auto& r : p.relators) {
    std::vector<Int> row(n, Int(0));
    for (const auto& [gen, e] : r.word().exponent_sums()) {
      auto it = index.find(gen);
      if (it == index.end())
        throw std::invalid_argument("relator uses undeclared generator '" + gen + "'");
      row[it->second] = e;
    }
    rows.push_back(std::move(row));
  }

  // Torsion check: all elementary divisors of the relation lattice must be 0/1.
  if (!rows.empty()) {
    IntMatrix m(rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    SmithForm s = smith_normal_form(m);
    for (const Int& d : s.diagonal)
      if (d != 0 && d != 1 && d != -1)
        throw std::domain_error("abelianize: torsion detected (elementary divisor " +
                                d.str() + ")");
  }

  // Identifications: relator vectors are zero or differences e_a - e_b here;
  // merge by union-find.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& row : rows) {
    int pos = -1, neg = -1, extra = 0;
    for (size_t j = 0; j < n; ++j) {
      if (row[j] == 1 && pos < 0)
        pos = static_cast<int>(j);
      else if (row[j] == -1 && neg < 0)
        neg = static_cast<int>(j);
      else if (row[j] != 0)
        ++extra;
    }
    if (extra > 0 || (pos >= 0) != (neg >= 0))
      throw std::domain_error("abelianize: relator abelianization is not a difference");
    if (pos >= 0) {
      int a = find(pos), b = find(neg);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  Abelianization ab;
  ab.generators = p.generators;
  ab.var_of_gen.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    int root = find(static_cast<int>(i));
    if (ab.var_of_gen[root] < 0) {
      ab.var_of_gen[root] = static_cast<int>(ab.var_names.size());
      ab.var_names.push_back(p.generators[root]);
    }
    ab.var_of_gen[i] = ab.var_of_gen[root];
  }
  return ab;
}

}  // namespace artinqp
