#pragma once

#include <cstddef>
#include <vector>

#include "bil/ring/field.hpp"

namespace bil::kernels {

using ring::Field;
using ring::Scalar;

enum class Exec { serial, parallel };

/// Row-major dense matrix over GF(p).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Scalar* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
  const Scalar* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }

  DenseMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const Field& F);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m, const Field& F, Exec exec = Exec::serial);
std::size_t rank(DenseMatrix m, const Field& F, Exec exec = Exec::serial);
/// Columns form a basis of {x : m x = 0}.
DenseMatrix nullspace(const DenseMatrix& m, const Field& F, Exec exec = Exec::serial);
Scalar determinant(DenseMatrix m, const Field& F);
/// Solve m x = b; empty optional-like result signalled by returning false.
bool solve(const DenseMatrix& m, const std::vector<Scalar>& b, std::vector<Scalar>& x, const Field& F);

}  // namespace bil::kernels
