#include "artinqp/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace artinqp {

namespace {

long gcd_long(long a, long b) {
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Exact division of integer polynomials (low degree first), divisor monic or
// with leading coefficient dividing everything it must.
std::vector<Int> zpoly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<Int> q;
  if (num.empty()) return q;
  if (num.size() < den.size()) throw std::logic_error("zpoly_divexact: degree underflow");
  q.assign(num.size() - den.size() + 1, Int(0));
  for (long i = static_cast<long>(num.size()) - 1;
       i >= static_cast<long>(den.size()) - 1; --i) {
    Int lead = num[i];
    if (lead == 0) continue;
    if (lead % den.back() != 0) throw std::logic_error("zpoly_divexact: not divisible");
    Int f = lead / den.back();
    long shift = i - (static_cast<long>(den.size()) - 1);
    q[shift] = f;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= f * den[j];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("zpoly_divexact: nonzero remainder");
  return q;
}

// Rational univariate polynomial helpers, low degree first.
using QPoly = std::vector<Rat>;

void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qpoly_trim(r);
  return r;
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qpoly_trim(a);
  return a;
}

// a mod m (m monic when coming from Phi_n over Q).
QPoly qpoly_mod(QPoly a, const QPoly& m) {
  qpoly_trim(a);
  while (a.size() >= m.size()) {
    Rat f = a.back() / m.back();
    size_t shift = a.size() - m.size();
    for (size_t j = 0; j < m.size(); ++j) a[shift + j] -= f * m[j];
    qpoly_trim(a);
  }
  return a;
}

QPoly qpoly_divmod(QPoly& a, const QPoly& m) {
  QPoly q;
  qpoly_trim(a);
  if (a.size() >= m.size()) q.assign(a.size() - m.size() + 1, Rat(0));
  while (a.size() >= m.size()) {
    Rat f = a.back() / m.back();
    size_t shift = a.size() - m.size();
    q[shift] = f;
    for (size_t j = 0; j < m.size(); ++j) a[shift + j] -= f * m[j];
    qpoly_trim(a);
  }
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(long n) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  std::vector<Int> result;
  if (n == 1) {
    result = {Int(-1), Int(1)};  // x - 1
  } else {
    // x^n - 1 divided by all proper Phi_d, d | n.
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      // Recursive lookup without re-locking: compute into the cache directly.
      if (cache.find(d) == cache.end()) {
        // Depth is tiny (divisor chains); recompute inline.
        std::vector<Int> nd(d + 1, Int(0));
        nd[0] = -1;
        nd[d] = 1;
        for (long e = 1; e < d; ++e)
          if (d % e == 0) nd = zpoly_divexact(std::move(nd), cache.at(e));
        cache.emplace(d, std::move(nd));
      }
      num = zpoly_divexact(std::move(num), cache.at(d));
    }
    result = std::move(num);
  }
  return cache.emplace(n, std::move(result)).first->second;
}

RootOfUnity RootOfUnity::make(long n, long k) {
  if (n < 1) throw std::invalid_argument("root of unity: order must be >= 1");
  k = mod_pos(k, n);
  long g = gcd_long(n, k == 0 ? n : k);
  if (k == 0) return {1, 0};
  return {n / g, k / g};
}

RootOfUnity RootOfUnity::times(const RootOfUnity& o) const {
  long m = lcm_long(order, o.order);
  long e = mod_pos(exp * (m / order) + o.exp * (m / o.order), m);
  return make(m, e);
}

RootOfUnity RootOfUnity::pow(long t) const {
  long e = mod_pos(exp * mod_pos(t, order), order);
  return make(order, e);
}

std::string RootOfUnity::str() const {
  if (order == 1) return "1";
  if (order == 2) return "-1";
  std::ostringstream os;
  os << "zeta(" << order << "," << exp << ")";
  return os.str();
}

namespace {

// Coordinates of x^e in Q[x]/Phi_n.
std::vector<Rat> power_coords(long n, long e) {
  const std::vector<Int>& phi = cyclotomic_poly(n);
  long deg = static_cast<long>(phi.size()) - 1;
  QPoly m(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) m[i] = Rat(phi[i]);
  QPoly x(e + 1, Rat(0));
  x[e] = 1;
  QPoly r = qpoly_mod(std::move(x), m);
  r.resize(deg, Rat(0));
  return r;
}

}  // namespace

Cyclo Cyclo::of_root(const RootOfUnity& z) {
  Cyclo r;
  r.n_ = z.order;
  r.c_ = power_coords(z.order, mod_pos(z.exp, z.order));
  return r;
}

bool Cyclo::is_zero() const {
  for (const Rat& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclo::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw std::logic_error("Cyclo: not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

Cyclo Cyclo::lifted(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("Cyclo::lifted: not a multiple conductor");
  const std::vector<Int>& phi = cyclotomic_poly(m);
  long deg = static_cast<long>(phi.size()) - 1;
  QPoly mm(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) mm[i] = Rat(phi[i]);
  long step = m / n_;
  QPoly acc(deg > 0 ? deg : 1, Rat(0));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    QPoly x(j * step + 1, Rat(0));
    x[j * step] = c_[j];
    x = qpoly_mod(std::move(x), mm);
    if (acc.size() < x.size()) acc.resize(x.size(), Rat(0));
    for (size_t t = 0; t < x.size(); ++t) acc[t] += x[t];
  }
  Cyclo r;
  r.n_ = m;
  acc.resize(deg, Rat(0));
  r.c_ = std::move(acc);
  return r;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  long m = lcm_long(n_, o.n_);
  Cyclo a = lifted(m), b = o.lifted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return *this = a;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  long m = lcm_long(n_, o.n_);
  Cyclo a = lifted(m), b = o.lifted(m);
  const std::vector<Int>& phi = cyclotomic_poly(m);
  QPoly mm(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) mm[i] = Rat(phi[i]);
  QPoly prod = qpoly_mul(a.c_, b.c_);
  prod = qpoly_mod(std::move(prod), mm);
  prod.resize(phi.size() - 1, Rat(0));
  a.c_ = std::move(prod);
  return *this = a;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo: division by zero");
  const std::vector<Int>& phi = cyclotomic_poly(n_);
  QPoly m(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) m[i] = Rat(phi[i]);
  // Extended Euclid over Q[x]: u*f + v*Phi = gcd = nonzero constant.
  QPoly r0 = m, r1 = c_;
  qpoly_trim(r1);
  QPoly u0 = {}, u1 = {Rat(1)};  // coefficients of f
  while (true) {
    qpoly_trim(r1);
    if (r1.empty()) throw std::logic_error("Cyclo::inverse: zero remainder chain");
    if (r1.size() == 1) break;  // constant
    QPoly q = qpoly_divmod(r0, r1);  // r0 becomes remainder
    std::swap(r0, r1);
    QPoly u2 = qpoly_sub(u0, qpoly_mul(q, u1));
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  Rat c = r1[0];
  Cyclo result;
  result.n_ = n_;
  u1 = qpoly_mod(std::move(u1), m);
  u1.resize(phi.size() - 1, Rat(0));
  for (Rat& x : u1) x /= c;
  result.c_ = std::move(u1);
  return result;
}

bool Cyclo::operator==(const Cyclo& o) const {
  long m = lcm_long(n_, o.n_);
  return lifted(m).c_ == o.lifted(m).c_;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << rational_value();
    return os.str();
  }
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i];
    if (i >= 1) os << "*zeta(" << n_ << ")" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Cyclo cyclo_embed(long n, long k) {
  if (n < 1) throw std::invalid_argument("cyclo_embed: N must be >= 1");
  return Cyclo::of_root(RootOfUnity::make(n, k)).lifted(n);
}

}  // namespace artinqp
