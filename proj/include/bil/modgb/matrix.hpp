#pragma once

#include <vector>

#include "bil/modgb/free_module.hpp"

namespace bil::modgb {

/// Degree-0 map source -> target stored by columns (column j is the image of
/// the j-th source generator). Entry (i, j) is zero or homogeneous of degree
/// source.degree(j) - target.degree(i).
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /// Throws DegreeMismatch if a column is not homogeneous of the source degree.
  GradedMatrix(FreeModule target, FreeModule source, std::vector<Vec> columns);
  /// Zero map.
  GradedMatrix(FreeModule target, FreeModule source);
  static GradedMatrix identity(const FreeModule& F);
  /// Builds from explicit entries rows[i][j]; source degrees are inferred from
  /// the nonzero entries (zero columns get the supplied fallback).
  static GradedMatrix from_rows(const FreeModule& target, const std::vector<std::vector<Polynomial>>& rows,
                                const std::vector<int>& source_degrees);
  /// 1 x n matrix of homogeneous polynomials into S (degree 0 target).
  static GradedMatrix row_of(const RingPtr& ring, const std::vector<Polynomial>& gens);

  const FreeModule& target() const noexcept { return target_; }
  const FreeModule& source() const noexcept { return source_; }
  const RingPtr& ring() const noexcept { return target_.ring(); }
  int rows() const noexcept { return target_.rank(); }
  int cols() const noexcept { return source_.rank(); }
  const Vec& column(int j) const { return cols_[j]; }
  const std::vector<Vec>& columns() const noexcept { return cols_; }
  Polynomial entry(int i, int j) const { return cols_[j].component(i); }
  std::vector<std::vector<Polynomial>> entries() const;

  bool is_zero() const;
  /// True when some entry is a nonzero constant.
  bool has_unit_entry() const;

  /// Hom(-, S(t)) applied to the map: target^* -> source^* with the same entries.
  GradedMatrix transpose(int t = 0) const;
  GradedMatrix select_columns(const std::vector<int>& idx) const;
  GradedMatrix drop_zero_columns() const;
  /// Apply to an element of the source.
  Vec apply(const Vec& v) const;
  /// Shift both free modules by s (M(s) convention).
  GradedMatrix shifted(int s) const;
  /// Entries reduced modulo the ring relation.
  GradedMatrix normalized() const;

 private:
  FreeModule target_, source_;
  std::vector<Vec> cols_;
};

/// a ∘ b.
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);
/// [a | b] with a common target.
GradedMatrix concat(const GradedMatrix& a, const GradedMatrix& b);
/// Block diagonal a ⊕ b.
GradedMatrix direct_sum(const GradedMatrix& a, const GradedMatrix& b);
/// [a ; b] with a common source.
GradedMatrix stack(const GradedMatrix& a, const GradedMatrix& b);

}  // namespace bil::modgb
