#include "bil/kernels/dense.hpp"

#include <algorithm>

namespace bil::kernels {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const Field& F) {
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Scalar aik = a(i, k);
      if (!aik) continue;
      const Scalar* brow = b.row(k);
      Scalar* crow = c.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (brow[j]) crow[j] = F.add(crow[j], F.mul(aik, brow[j]));
    }
  return c;
}

namespace {

// row_t -= factor * row_p, restricted to columns >= from
inline void axpy_row(Scalar* target, const Scalar* pivot_row, Scalar factor, std::size_t from, std::size_t cols,
                     const Field& F) {
  Scalar nf = F.neg(factor);
  for (std::size_t j = from; j < cols; ++j)
    if (pivot_row[j]) target[j] = F.add(target[j], F.mul(nf, pivot_row[j]));
}

}  // namespace

std::vector<std::size_t> rref(DenseMatrix& m, const Field& F, Exec exec) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) std::swap_ranges(m.row(sel), m.row(sel) + cols, m.row(r));
    Scalar inv = F.inv(m(r, c));
    Scalar* prow = m.row(r);
    for (std::size_t j = c; j < cols; ++j) prow[j] = F.mul(prow[j], inv);
    const long long nrows = static_cast<long long>(rows);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < nrows; ++i) {
        std::size_t ui = static_cast<std::size_t>(i);
        if (ui == r) continue;
        Scalar f = m(ui, c);
        if (f) axpy_row(m.row(ui), prow, f, c, cols, F);
      }
    } else {
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r) continue;
        Scalar f = m(i, c);
        if (f) axpy_row(m.row(i), prow, f, c, cols, F);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(DenseMatrix m, const Field& F, Exec exec) { return rref(m, F, exec).size(); }

DenseMatrix nullspace(const DenseMatrix& m, const Field& F, Exec exec) {
  DenseMatrix r = m;
  auto pivots = rref(r, F, exec);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  DenseMatrix ns(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    ns(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) ns(pivots[i], k) = F.neg(r(i, f));
  }
  return ns;
}

Scalar determinant(DenseMatrix m, const Field& F) {
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) {
      std::swap_ranges(m.row(sel), m.row(sel) + n, m.row(c));
      det = F.neg(det);
    }
    det = F.mul(det, m(c, c));
    Scalar inv = F.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      Scalar f = m(i, c);
      if (f) axpy_row(m.row(i), m.row(c), F.mul(f, inv), c, n, F);
    }
  }
  return det;
}

bool solve(const DenseMatrix& m, const std::vector<Scalar>& b, std::vector<Scalar>& x, const Field& F) {
  DenseMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i), m.row(i) + m.cols(), aug.row(i));
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug, F);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return true;
}

}  // namespace bil::kernels
