#include "artinqp/rank.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace artinqp {

Int coeff_divexact(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("divexact by zero");
  Int q = a / b;
  if (q * b != a) throw std::logic_error("coeff_divexact: not divisible");
  return q;
}

Cyclo coeff_divexact(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

template <class C>
SparsePoly<C> poly_divexact(const SparsePoly<C>& num, const SparsePoly<C>& den) {
  if (den.is_zero()) throw std::domain_error("poly_divexact by zero");
  SparsePoly<C> rem = num;
  SparsePoly<C> q(num.arity());
  const auto& dlead = den.leading();
  while (!rem.is_zero()) {
    const auto& rlead = rem.leading();
    ExpVec e(rem.arity());
    for (int i = 0; i < rem.arity(); ++i) {
      e[i] = rlead.first[i] - dlead.first[i];
    }
    C c = coeff_divexact(rlead.second, dlead.second);
    SparsePoly<C> t = SparsePoly<C>::monomial(num.arity(), e, c);
    q += t;
    rem -= t * den;
  }
  return q;
}

template SparsePoly<Int> poly_divexact(const SparsePoly<Int>&, const SparsePoly<Int>&);
template SparsePoly<Cyclo> poly_divexact(const SparsePoly<Cyclo>&, const SparsePoly<Cyclo>&);

namespace {

// Fraction-free Gaussian elimination (Bareiss): entries stay in the
// coefficient ring, every intermediate is a minor of the input. Pivot rule
// (deterministic, data-dependent): the smallest active entry by term count,
// then the sparsest column, lowest (column, row) on ties. Keeps fill-in low
// on the block-sparse matrices this engine produces. The row-update inner
// loop is the data-parallel kernel.
template <class C>
int bareiss_rank_impl(std::vector<std::vector<SparsePoly<C>>>& m, Exec exec) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t top = 0;
  SparsePoly<C> prev;  // previous pivot; empty means 1
  bool have_prev = false;
  int rank = 0;
  std::vector<char> col_used(cols, 0);
  while (top < rows) {
    // Pivot: the smallest active entry (fewest terms), then the sparsest
    // column, lowest (column, row) on ties.
    size_t best_col = cols, best_row = rows;
    size_t best_terms = 0, best_count = 0;
    std::vector<size_t> col_count(cols, 0);
    for (size_t j = 0; j < cols; ++j) {
      if (col_used[j]) continue;
      for (size_t i = top; i < rows; ++i)
        if (!m[i][j].is_zero()) ++col_count[j];
    }
    for (size_t j = 0; j < cols; ++j) {
      if (col_used[j] || col_count[j] == 0) continue;
      for (size_t i = top; i < rows; ++i) {
        if (m[i][j].is_zero()) continue;
        size_t tc = m[i][j].term_count();
        if (best_col == cols || tc < best_terms ||
            (tc == best_terms && col_count[j] < best_count)) {
          best_col = j;
          best_row = i;
          best_terms = tc;
          best_count = col_count[j];
        }
      }
    }
    if (best_col == cols) break;  // no nonzero entry left
    size_t col = best_col;
    std::swap(m[top], m[best_row]);
    const std::vector<SparsePoly<C>>& prow = m[top];
    const SparsePoly<C> piv = prow[col];

    auto update_row = [&](size_t i) {
      std::vector<SparsePoly<C>>& row = m[i];
      const SparsePoly<C> head = row[col];
      bool head_zero = head.is_zero();
      for (size_t j = 0; j < cols; ++j) {
        if (col_used[j] || j == col) continue;
        if (row[j].is_zero() && head_zero) continue;
        SparsePoly<C> v = head_zero ? row[j] * piv : row[j] * piv - head * prow[j];
        row[j] = have_prev ? poly_divexact(v, prev) : std::move(v);
      }
      row[col] = SparsePoly<C>(piv.arity());
    };

    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
      for (long i = static_cast<long>(top) + 1; i < static_cast<long>(rows); ++i)
        update_row(static_cast<size_t>(i));
#else
      for (size_t i = top + 1; i < rows; ++i) update_row(i);
#endif
    } else {
      for (size_t i = top + 1; i < rows; ++i) update_row(i);
    }

    prev = piv;
    have_prev = true;
    col_used[col] = 1;
    ++top;
    ++rank;
  }
  return rank;
}

template <class C>
SparsePoly<C> bareiss_det_impl(std::vector<std::vector<SparsePoly<C>>> m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  int arity = m[0][0].arity();
  SparsePoly<C> prev;
  bool have_prev = false;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = n;
      for (size_t i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return SparsePoly<C>(arity);  // zero column: det 0
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        SparsePoly<C> v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = have_prev ? poly_divexact(v, prev) : std::move(v);
      }
    prev = m[k][k];
    have_prev = true;
  }
  SparsePoly<C> det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// Row-wise monomial shift making all exponents nonnegative; a unit scaling,
// so the rank is unchanged.
template <class C>
void clear_row_units(std::vector<std::vector<SparsePoly<C>>>& m) {
  for (auto& row : m) {
    if (row.empty()) continue;
    int arity = row[0].arity();
    ExpVec mins(arity, 0);
    for (const auto& p : row) {
      ExpVec e = p.min_exponents();
      for (int i = 0; i < arity; ++i) mins[i] = std::min(mins[i], e[i]);
    }
    ExpVec shift(arity, 0);
    bool need = false;
    for (int i = 0; i < arity; ++i)
      if (mins[i] < 0) {
        shift[i] = -mins[i];
        need = true;
      }
    if (!need) continue;
    for (auto& p : row) p = p.shifted(shift);
  }
}

}  // namespace

int bareiss_rank(std::vector<std::vector<LaurentPoly>> m, Exec exec) {
  clear_row_units(m);
  return bareiss_rank_impl(m, exec);
}

int bareiss_rank(std::vector<std::vector<CPoly>> m, Exec exec) {
  clear_row_units(m);
  return bareiss_rank_impl(m, exec);
}

LaurentPoly bareiss_det(std::vector<std::vector<LaurentPoly>> m) {
  return bareiss_det_impl(std::move(m));
}

int generic_rank(const std::vector<std::vector<LaurentPoly>>& m, Exec exec) {
  return bareiss_rank(m, exec);
}

int rank_on_parametrization(const std::vector<std::vector<LaurentPoly>>& m,
                            const TorusParametrization& p, Exec exec) {
  std::vector<std::vector<CPoly>> sub(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    sub[i].reserve(m[i].size());
    for (const auto& e : m[i]) sub[i].push_back(substitute_laurent(e, p));
  }
  return bareiss_rank(std::move(sub), exec);
}

std::vector<LaurentPoly> all_minors(const std::vector<std::vector<LaurentPoly>>& m,
                                    int order, Exec exec) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  if (order < 1 || static_cast<size_t>(order) > rows || static_cast<size_t>(order) > cols)
    throw std::out_of_range("all_minors: order out of range");
  // Enumerate index subsets in lexicographic order.
  auto subsets = [](size_t n, int k) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      int i = k - 1;
      while (i >= 0 && cur[i] == n - k + i) --i;
      if (i < 0) break;
      ++cur[i];
      for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
  };
  std::vector<std::vector<size_t>> rsets = subsets(rows, order);
  std::vector<std::vector<size_t>> csets = subsets(cols, order);
  std::vector<LaurentPoly> out(rsets.size() * csets.size());

  auto compute = [&](size_t idx) {
    const auto& rs = rsets[idx / csets.size()];
    const auto& cs = csets[idx % csets.size()];
    std::vector<std::vector<LaurentPoly>> sub(order, std::vector<LaurentPoly>(order));
    for (int i = 0; i < order; ++i)
      for (int j = 0; j < order; ++j) sub[i][j] = m[rs[i]][cs[j]];
    out[idx] = bareiss_det(std::move(sub));
  };

  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(out.size()); ++i) compute(static_cast<size_t>(i));
#else
    for (size_t i = 0; i < out.size(); ++i) compute(i);
#endif
  } else {
    for (size_t i = 0; i < out.size(); ++i) compute(i);
  }
  return out;
}

}  // namespace artinqp
