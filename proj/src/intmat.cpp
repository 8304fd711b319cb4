#include "hbl/intmat.hpp"

#include <algorithm>
#include <cassert>

#include "hbl/errors.hpp"

namespace hbl {

IntMat::IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols)
    throw Error("IntMat: entry count does not match dimensions");
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

IntMat IntMat::diagonal(const std::vector<Int>& d) {
  IntMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m.at(i, i) = d[i];
  return m;
}

std::vector<Int> IntMat::row(std::size_t i) const {
  std::vector<Int> r(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    r[j] = at(i, j);
  return r;
}

std::vector<Int> IntMat::col(std::size_t j) const {
  std::vector<Int> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = at(i, j);
  return c;
}

void IntMat::swap_rows(std::size_t i, std::size_t k) {
  if (i == k)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap(at(i, j), at(k, j));
}

void IntMat::swap_cols(std::size_t j, std::size_t l) {
  if (j == l)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap(at(i, j), at(i, l));
}

void IntMat::add_row(std::size_t i, std::size_t k, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j)
    at(i, j) += c * at(k, j);
}

void IntMat::add_col(std::size_t j, std::size_t l, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i)
    at(i, j) += c * at(i, l);
}

void IntMat::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j)
    at(i, j) = -at(i, j);
}

void IntMat::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i)
    at(i, j) = -at(i, j);
}

bool IntMat::operator<(const IntMat& o) const {
  if (rows_ != o.rows_)
    return rows_ < o.rows_;
  if (cols_ != o.cols_)
    return cols_ < o.cols_;
  return a_ < o.a_;
}

bool IntMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows())
    throw Error("mat_mul: dimension mismatch");
  IntMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& x) {
  if (a.cols() != x.size())
    throw Error("mat_vec: dimension mismatch");
  std::vector<Int> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != 0)
        y[i] += a.at(i, j) * x[j];
  return y;
}

IntMat transpose(const IntMat& a) {
  IntMat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      t.at(j, i) = a.at(i, j);
  return t;
}

IntMat hstack(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows())
    throw Error("hstack: row mismatch");
  IntMat c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j)
      c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.cols())
    throw Error("vstack: column mismatch");
  IntMat c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

namespace {

// Elementary operations applied to d while keeping u*a*v == d,
// u_inv == u^-1, v_inv == v^-1.
struct SnfWork {
  IntMat d, u, u_inv, v, v_inv;

  void swap_rows(std::size_t i, std::size_t k) {
    d.swap_rows(i, k);
    u.swap_rows(i, k);
    u_inv.swap_cols(i, k);
  }
  void swap_cols(std::size_t j, std::size_t l) {
    d.swap_cols(j, l);
    v.swap_cols(j, l);
    v_inv.swap_rows(j, l);
  }
  // row i += c * row k
  void add_row(std::size_t i, std::size_t k, const Int& c) {
    d.add_row(i, k, c);
    u.add_row(i, k, c);
    u_inv.add_col(k, i, -c);
  }
  // col j += c * col l
  void add_col(std::size_t j, std::size_t l, const Int& c) {
    d.add_col(j, l, c);
    v.add_col(j, l, c);
    v_inv.add_row(l, j, -c);
  }
  void negate_row(std::size_t i) {
    d.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
  const std::size_t r = a.rows(), c = a.cols();
  SnfWork w{a, IntMat::identity(r), IntMat::identity(r), IntMat::identity(c),
            IntMat::identity(c)};

  const std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    // Locate a nonzero entry of minimal absolute value in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        const Int& x = w.d.at(i, j);
        if (x == 0)
          continue;
        Int ax = boost::multiprecision::abs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (!found)
      break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      // Clear column t below the pivot, keeping the smallest remainder as
      // the new pivot when division is inexact.
      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (w.d.at(i, t) == 0)
          continue;
        Int q = w.d.at(i, t) / w.d.at(t, t);
        w.add_row(i, t, -q);
        if (w.d.at(i, t) != 0) {
          w.swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty)
        continue;
      for (std::size_t j = t + 1; j < c; ++j) {
        if (w.d.at(t, j) == 0)
          continue;
        Int q = w.d.at(t, j) / w.d.at(t, t);
        w.add_col(j, t, -q);
        if (w.d.at(t, j) != 0) {
          w.swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty)
        continue;
      // Pivot must divide every entry of the trailing block.
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i)
        for (std::size_t j = t + 1; j < c && fixed; ++j)
          if (w.d.at(i, j) % w.d.at(t, t) != 0) {
            w.add_row(t, i, 1);
            fixed = false;
          }
      if (fixed)
        break;
    }
    if (w.d.at(t, t) < 0)
      w.negate_row(t);
  }
  return SmithForm{std::move(w.d), std::move(w.u), std::move(w.u_inv),
                   std::move(w.v), std::move(w.v_inv)};
}

IntMat hermite_rows(const IntMat& a) {
  IntMat h = a;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t r = 0;
  for (std::size_t cidx = 0; cidx < cols && r < rows; ++cidx) {
    // Euclid on column cidx among rows >= r.
    for (;;) {
      std::size_t pick = rows;
      Int best;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, cidx) == 0)
          continue;
        Int ax = boost::multiprecision::abs(h.at(i, cidx));
        if (pick == rows || ax < best) {
          pick = i;
          best = ax;
        }
      }
      if (pick == rows)
        break;  // column clear
      h.swap_rows(r, pick);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, cidx) == 0)
          continue;
        Int q = h.at(i, cidx) / h.at(r, cidx);
        h.add_row(i, r, -q);
        if (h.at(i, cidx) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (h.at(r, cidx) == 0)
      continue;
    if (h.at(r, cidx) < 0)
      h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, cidx), h.at(r, cidx));
      if (q != 0)
        h.add_row(i, r, -q);
    }
    ++r;
  }
  // Drop zero rows.
  IntMat out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      out.at(i, j) = h.at(i, j);
  return out;
}

std::size_t integer_rank(const IntMat& a) { return hermite_rows(a).rows(); }

IntMat kernel_columns(const IntMat& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool zero = j >= a.rows() || s.d.at(j, j) == 0;
    if (zero)
      free_cols.push_back(j);
  }
  IntMat k(a.cols(), free_cols.size());
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx)
    for (std::size_t i = 0; i < a.cols(); ++i)
      k.at(i, idx) = s.v.at(i, free_cols[idx]);
  return k;
}

std::optional<std::vector<Int>> solve_linear(const IntMat& a, const std::vector<Int>& b) {
  if (b.size() != a.rows())
    throw Error("solve_linear: dimension mismatch");
  SmithForm s = smith_normal_form(a);
  std::vector<Int> cvec = mat_vec(s.u, b);
  std::vector<Int> w(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Int di = (i < a.cols()) ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (cvec[i] != 0)
        return std::nullopt;
    } else {
      if (cvec[i] % di != 0)
        return std::nullopt;
      if (i < a.cols())
        w[i] = cvec[i] / di;
    }
  }
  return mat_vec(s.v, w);
}

std::vector<Int> reduce_mod_row_lattice(const IntMat& basis, std::vector<Int> x) {
  IntMat h = hermite_rows(basis);
  if (h.rows() == 0)
    return x;
  if (h.cols() != x.size())
    throw Error("reduce_mod_row_lattice: dimension mismatch");
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && h.at(i, p) == 0)
      ++p;
    if (p == h.cols())
      continue;
    Int q = floor_div(x[p], h.at(i, p));
    if (q != 0)
      for (std::size_t j = p; j < h.cols(); ++j)
        x[j] -= q * h.at(i, j);
  }
  return x;
}

bool in_row_lattice(const IntMat& basis, const std::vector<Int>& x) {
  std::vector<Int> r = reduce_mod_row_lattice(basis, x);
  return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
}

}  // namespace hbl
