#ifndef ARTINQP_LATTICE_HPP
#define ARTINQP_LATTICE_HPP

#include <vector>

#include "artinqp/numeric.hpp"

namespace artinqp {

// Dense integer matrix, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  static IntMatrix identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(size_t i, size_t j);
  void swap_cols(size_t i, size_t j);
  void negate_row(size_t i);
  void negate_col(size_t j);
  void add_row_multiple(size_t dst, size_t src, const Int& f);  // row dst += f * row src
  void add_col_multiple(size_t dst, size_t src, const Int& f);

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  size_t rows_, cols_;
  std::vector<Int> a_;
};

// Smith normal form: U * A * V = D with U, V unimodular, D diagonal,
// d_1 | d_2 | ... Deterministic pivoting (minimal absolute value, lowest
// index).
struct SmithForm {
  IntMatrix d, u, v;
  std::vector<Int> diagonal;  // nonzero entries first, then zeros
  size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form with a parallel right-hand side carried
// through the same row operations. Returns the echelon row count (rank);
// rows beyond it are zero in `h` and carry the residual rhs combination.
// Pivots positive, entries above pivots reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

// `ops` receives every elementary row operation so callers can mirror them
// on auxiliary data (e.g. torsion values): kind 'S' swap(i,j), 'N' negate(i),
// 'A' add(dst, src, f).
struct RowOp {
  char kind;
  size_t i, j;
  Int f;
};

HermiteForm hermite_normal_form(const IntMatrix& a, std::vector<RowOp>* ops = nullptr);

}  // namespace artinqp

#endif
