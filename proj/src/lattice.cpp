#include "artinqp/lattice.hpp"

#include <stdexcept>

namespace artinqp {

void IntMatrix::swap_rows(size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(size_t i) {
  for (size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(size_t j) {
  for (size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(size_t dst, size_t src, const Int& f) {
  for (size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col_multiple(size_t dst, size_t src, const Int& f) {
  for (size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm s;
  s.d = a;
  s.u = IntMatrix::identity(a.rows());
  s.v = IntMatrix::identity(a.cols());
  IntMatrix& d = s.d;
  size_t m = a.rows(), n = a.cols();
  size_t t = 0;
  while (t < m && t < n) {
    // Pivot: minimal |value| among d[i][j], i,j >= t; lowest (i,j) on ties.
    size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j) {
        if (d.at(i, j) == 0) continue;
        Int v = int_abs(d.at(i, j));
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    d.swap_rows(t, pi);
    s.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    s.v.swap_cols(t, pj);
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
    bool dirty = false;
    for (size_t i = t + 1; i < m; ++i) {
      if (d.at(i, t) == 0) continue;
      Int q = d.at(i, t) / d.at(t, t);
      d.add_row_multiple(i, t, -q);
      s.u.add_row_multiple(i, t, -q);
      if (d.at(i, t) != 0) dirty = true;
    }
    for (size_t j = t + 1; j < n; ++j) {
      if (d.at(t, j) == 0) continue;
      Int q = d.at(t, j) / d.at(t, t);
      d.add_col_multiple(j, t, -q);
      s.v.add_col_multiple(j, t, -q);
      if (d.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainders present; re-pick pivot
    // Divisibility condition d_t | all remaining entries.
    bool fixed = true;
    for (size_t i = t + 1; i < m && fixed; ++i)
      for (size_t j = t + 1; j < n && fixed; ++j)
        if (d.at(i, j) % d.at(t, t) != 0) {
          d.add_row_multiple(t, i, Int(1));
          s.u.add_row_multiple(t, i, Int(1));
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }
  s.rank = 0;
  for (size_t i = 0; i < std::min(m, n); ++i) {
    s.diagonal.push_back(s.d.at(i, i));
    if (s.d.at(i, i) != 0) ++s.rank;
  }
  return s;
}

HermiteForm hermite_normal_form(const IntMatrix& a, std::vector<RowOp>* ops) {
  HermiteForm h;
  h.h = a;
  IntMatrix& d = h.h;
  size_t m = a.rows(), n = a.cols();
  auto rec = [&](char kind, size_t i, size_t j, const Int& f) {
    if (ops) ops->push_back({kind, i, j, f});
  };
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    // Reduce the column below `row` to a single entry via gcd steps.
    while (true) {
      size_t pi = m;
      Int best;
      for (size_t i = row; i < m; ++i) {
        if (d.at(i, col) == 0) continue;
        Int v = int_abs(d.at(i, col));
        if (pi == m || v < best) {
          best = v;
          pi = i;
        }
      }
      if (pi == m) break;  // column empty below
      if (pi != row) {
        d.swap_rows(row, pi);
        rec('S', row, pi, Int(0));
      }
      bool more = false;
      for (size_t i = row + 1; i < m; ++i) {
        if (d.at(i, col) == 0) continue;
        Int q = d.at(i, col) / d.at(row, col);
        d.add_row_multiple(i, row, -q);
        rec('A', i, row, -q);
        if (d.at(i, col) != 0) more = true;
      }
      if (!more) break;
    }
    if (d.at(row, col) == 0) continue;
    if (d.at(row, col) < 0) {
      d.negate_row(row);
      rec('N', row, row, Int(0));
    }
    // Reduce entries above the pivot into [0, pivot).
    for (size_t i = 0; i < row; ++i) {
      Int q = d.at(i, col) / d.at(row, col);
      Int r = d.at(i, col) - q * d.at(row, col);
      if (r < 0) q -= 1;
      if (q != 0) {
        d.add_row_multiple(i, row, -q);
        rec('A', i, row, -q);
      }
    }
    h.pivot_cols.push_back(col);
    ++row;
  }
  h.rank = row;
  return h;
}

}  // namespace artinqp
