#include "artinqp/poly.hpp"

#include <sstream>

namespace artinqp {

std::string render_poly(const LaurentPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool any_var = false;
    std::ostringstream mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) mono << "*";
      mono << (i < vars.size() ? vars[i] : "t" + std::to_string(i));
      if (e[i] != 1) mono << "^" << e[i];
      any_var = true;
    }
    if (!any_var) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << mono.str();
    }
    first = false;
  }
  return os.str();
}

std::string render_poly(const LaurentPoly& p) {
  std::vector<std::string> vars;
  for (int i = 0; i < p.arity(); ++i) vars.push_back("t" + std::to_string(i));
  return render_poly(p, vars);
}

}  // namespace artinqp
