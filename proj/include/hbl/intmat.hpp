#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hbl/numbers.hpp"

namespace hbl {

// Dense integer matrix over arbitrary-precision integers. Row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMat identity(std::size_t n);
  static IntMat diagonal(const std::vector<Int>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> row(std::size_t i) const;
  std::vector<Int> col(std::size_t j) const;

  void swap_rows(std::size_t i, std::size_t k);
  void swap_cols(std::size_t j, std::size_t l);
  // row i += c * row k
  void add_row(std::size_t i, std::size_t k, const Int& c);
  // col j += c * col l
  void add_col(std::size_t j, std::size_t l, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool operator==(const IntMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }
  bool operator<(const IntMat& o) const;  // lexicographic, for canonical ordering

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& x);
IntMat transpose(const IntMat& a);
IntMat hstack(const IntMat& a, const IntMat& b);
IntMat vstack(const IntMat& a, const IntMat& b);

// Smith normal form: d = u * a * v with u, v unimodular and d diagonal,
// d(0,0) | d(1,1) | ... ; diagonal entries nonnegative, zeros trailing.
struct SmithForm {
  IntMat d;
  IntMat u, u_inv;  // rows x rows
  IntMat v, v_inv;  // cols x cols
};
SmithForm smith_normal_form(const IntMat& a);

// Canonical row-style Hermite normal form of the lattice spanned by the rows:
// pivots strictly to the right going down, positive, entries above a pivot
// reduced into [0, pivot). Zero rows are dropped, so the result is the unique
// basis of the row lattice.
IntMat hermite_rows(const IntMat& a);

std::size_t integer_rank(const IntMat& a);

// Columns spanning the lattice {x : a * x = 0}.
IntMat kernel_columns(const IntMat& a);

// One integer solution of a * x = b, if any.
std::optional<std::vector<Int>> solve_linear(const IntMat& a, const std::vector<Int>& b);

// Reduce x modulo the lattice spanned by the rows of basis (a canonical
// representative of x + rowspace; basis need not be in HNF).
std::vector<Int> reduce_mod_row_lattice(const IntMat& basis, std::vector<Int> x);

// Membership of x in the row lattice of basis.
bool in_row_lattice(const IntMat& basis, const std::vector<Int>& x);

}  // namespace hbl
