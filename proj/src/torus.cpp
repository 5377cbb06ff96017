#include "artinqp/torus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "artinqp/lattice.hpp"

namespace artinqp {

void TorsionTorus::add_constraint(ExpVec e, RootOfUnity z) {
  if (static_cast<int>(e.size()) != ambient_)
    throw std::invalid_argument("torus constraint arity mismatch");
  constraints_.push_back({std::move(e), z});
}

void TorsionTorus::add_constraint(const std::string& line, int ambient_hint) {
  (void)ambient_hint;
  constraints_.push_back(parse_torus_constraint(line, ambient_));
}

namespace {

struct EchelonResult {
  bool consistent = true;
  std::vector<TorusConstraint> rows;  // HNF rows with torsion
  size_t rank = 0;
};

EchelonResult echelon(const TorsionTorus& t) {
  EchelonResult res;
  size_t m = t.constraints().size();
  int n = t.ambient();
  if (m == 0) return res;
  IntMatrix a(m, n);
  for (size_t i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = t.constraints()[i].expo[j];
  std::vector<RowOp> ops;
  HermiteForm h = hermite_normal_form(a, &ops);
  // Mirror the row operations on the torsion characters.
  std::vector<RootOfUnity> z(m);
  for (size_t i = 0; i < m; ++i) z[i] = t.constraints()[i].torsion;
  for (const RowOp& op : ops) {
    switch (op.kind) {
      case 'S':
        std::swap(z[op.i], z[op.j]);
        break;
      case 'N':
        z[op.i] = z[op.i].inverse();
        break;
      case 'A': {
        // multiplicative: z_i *= z_j^f
        long f = static_cast<long>(op.f);
        z[op.i] = z[op.i].times(z[op.j].pow(f));
        break;
      }
    }
  }
  res.rank = h.rank;
  for (size_t i = 0; i < m; ++i) {
    bool zero = true;
    for (int j = 0; j < n; ++j)
      if (h.h.at(i, j) != 0) zero = false;
    if (zero) {
      if (!z[i].is_one()) res.consistent = false;  // 1 = z with z != 1
      continue;
    }
    TorusConstraint c;
    c.expo.resize(n);
    for (int j = 0; j < n; ++j) c.expo[j] = static_cast<int>(h.h.at(i, j));
    c.torsion = z[i];
    res.rows.push_back(std::move(c));
  }
  return res;
}

}  // namespace

TorusCanonical torus_canonicalize(const TorsionTorus& t) {
  TorusCanonical out;
  EchelonResult e = echelon(t);
  out.nonempty = e.consistent;
  out.canonical = TorsionTorus(t.ambient());
  if (!e.consistent) {
    for (const auto& c : t.constraints()) out.canonical.add_constraint(c.expo, c.torsion);
    out.dimension = -1;
    return out;
  }
  for (const auto& c : e.rows) out.canonical.add_constraint(c.expo, c.torsion);
  out.dimension = t.ambient() - static_cast<int>(e.rank);
  if (out.dimension == 0) {
    TorusParametrization p = torus_parametrize(out.canonical);
    out.is_trivial_point = p.is_trivial_point();
  }
  return out;
}

bool TorsionTorus::operator==(const TorsionTorus& o) const {
  if (ambient_ != o.ambient_) return false;
  TorusCanonical a = torus_canonicalize(*this);
  TorusCanonical b = torus_canonicalize(o);
  if (a.nonempty != b.nonempty) return false;
  if (!a.nonempty) return true;  // all empty tori coincide
  return a.canonical.constraints() == b.canonical.constraints();
}

TorusParametrization torus_parametrize(const TorsionTorus& t) {
  EchelonResult e = echelon(t);
  if (!e.consistent) throw std::domain_error("torus_parametrize: empty torus");
  int n = t.ambient();
  size_t m = e.rows.size();
  TorusParametrization out;
  out.ambient = n;
  if (m == 0) {
    out.params = n;
    out.coeff.assign(n, RootOfUnity::one());
    for (int i = 0; i < n; ++i) {
      ExpVec v(n, 0);
      v[i] = 1;
      out.expo.push_back(std::move(v));
    }
    return out;
  }
  IntMatrix a(m, n);
  for (size_t i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = e.rows[i].expo[j];
  SmithForm s = smith_normal_form(a);
  size_t rank = s.rank;
  // System x^A = z. Substituting x_j = prod_t y_t^(V_jt) turns it into
  // y_i^(d_i) = z'_i with z' = U-transformed torsion, solved by canonical
  // roots; the n - rank free y's become the parameters.
  std::vector<RootOfUnity> zp(m, RootOfUnity::one());
  for (size_t i = 0; i < m; ++i)
    for (size_t r = 0; r < m; ++r) {
      long f = static_cast<long>(s.u.at(i, r));
      if (f != 0) zp[i] = zp[i].times(e.rows[r].torsion.pow(f));
    }
  for (size_t i = rank; i < m; ++i)
    if (!zp[i].is_one())
      throw std::logic_error("torus_parametrize: inconsistent after echelon");
  std::vector<RootOfUnity> y(n, RootOfUnity::one());
  for (size_t i = 0; i < rank; ++i) {
    long d = static_cast<long>(s.diagonal[i]);
    // canonical d-th root of zeta_order^exp is zeta_(order*d)^exp
    y[i] = RootOfUnity::make(zp[i].order * d, zp[i].exp);
  }
  int params = n - static_cast<int>(rank);
  out.params = params;
  out.coeff.assign(n, RootOfUnity::one());
  out.expo.assign(n, ExpVec(params, 0));
  for (int j = 0; j < n; ++j) {
    for (size_t tcol = 0; tcol < static_cast<size_t>(n); ++tcol) {
      long f = static_cast<long>(s.v.at(j, tcol));
      if (f == 0) continue;
      if (tcol < rank) {
        out.coeff[j] = out.coeff[j].times(y[tcol].pow(f));
      } else {
        out.expo[j][tcol - rank] += static_cast<int>(f);
      }
    }
  }
  return out;
}

TorsionTorus torus_intersect(const TorsionTorus& a, const TorsionTorus& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("torus_intersect: arity mismatch");
  TorsionTorus t(a.ambient());
  for (const auto& c : a.constraints()) t.add_constraint(c.expo, c.torsion);
  for (const auto& c : b.constraints()) t.add_constraint(c.expo, c.torsion);
  TorusCanonical canon = torus_canonicalize(t);
  return canon.nonempty ? canon.canonical : t;
}

std::vector<TorsionTorus> solve_pl_constraint(long l, const ExpVec& a, int ambient) {
  if (l < 1) throw std::invalid_argument("solve_pl_constraint: l must be >= 1");
  std::vector<TorsionTorus> out;
  for (long j = 1; j < l; ++j) {
    TorsionTorus t(ambient);
    t.add_constraint(a, RootOfUnity::make(l, j));
    out.push_back(std::move(t));
  }
  return out;
}

TorusConstraint parse_torus_constraint(const std::string& line, int ambient) {
  auto eq = line.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("torus constraint: missing '=': " + line);
  auto strip = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string lhs = strip(line.substr(0, eq));
  std::string rhs = strip(line.substr(eq + 1));
  TorusConstraint c;
  c.expo.assign(ambient, 0);
  // lhs: '*'-separated factors t<i> or t<i>^<e>
  std::istringstream ls(lhs);
  std::string tok;
  while (std::getline(ls, tok, '*')) {
    tok = strip(tok);
    if (tok.empty()) throw std::invalid_argument("torus constraint: empty factor");
    if (tok == "1") continue;
    if (tok[0] != 't')
      throw std::invalid_argument("torus constraint: bad factor '" + tok + "'");
    size_t car = tok.find('^');
    int idx = std::stoi(tok.substr(1, car == std::string::npos ? std::string::npos
                                                               : car - 1));
    int e = 1;
    if (car != std::string::npos) e = std::stoi(tok.substr(car + 1));
    if (idx < 0 || idx >= ambient)
      throw std::invalid_argument("torus constraint: variable t" + std::to_string(idx) +
                                  " out of range");
    c.expo[idx] += e;
  }
  if (rhs == "1") {
    c.torsion = RootOfUnity::one();
  } else if (rhs == "-1") {
    c.torsion = RootOfUnity::minus_one();
  } else if (rhs.rfind("zeta(", 0) == 0 && rhs.back() == ')') {
    std::string inner = rhs.substr(5, rhs.size() - 6);
    auto comma = inner.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("torus constraint: bad zeta '" + rhs + "'");
    long n = std::stol(strip(inner.substr(0, comma)));
    long k = std::stol(strip(inner.substr(comma + 1)));
    c.torsion = RootOfUnity::make(n, k);
  } else {
    throw std::invalid_argument("torus constraint: bad right-hand side '" + rhs + "'");
  }
  return c;
}

std::string render_torus_constraint(const TorusConstraint& c) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.expo.size(); ++i) {
    if (c.expo[i] == 0) continue;
    if (!first) os << "*";
    os << "t" << i;
    if (c.expo[i] != 1) os << "^" << c.expo[i];
    first = false;
  }
  if (first) os << "1";
  os << " = " << c.torsion.str();
  return os.str();
}

std::string TorsionTorus::str() const {
  TorusCanonical canon = torus_canonicalize(*this);
  std::ostringstream os;
  const TorsionTorus& t = canon.nonempty ? canon.canonical : *this;
  for (const auto& c : t.constraints()) os << render_torus_constraint(c) << "\n";
  return os.str();
}

}  // namespace artinqp
