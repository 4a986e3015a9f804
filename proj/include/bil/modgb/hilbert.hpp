#pragma once

#include <cstdint>
#include <vector>

#include "bil/modgb/submodule.hpp"

namespace bil::modgb {

/// Laurent polynomial sum c_k t^(low + k).
struct TPoly {
  int low = 0;
  std::vector<std::int64_t> c;

  bool is_zero() const;
  std::int64_t at_one() const;
  void trim();
};

/// Hilbert series N(t) / (1 - t)^num_vars of a graded module.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(TPoly numerator, int num_vars);

  const TPoly& numerator() const noexcept { return num_; }
  int num_vars() const noexcept { return nv_; }
  /// Krull dimension; -1 for the zero module.
  int dimension() const noexcept { return dim_; }
  /// Numerator after cancelling (1 - t) factors: series = Q(t) / (1 - t)^dimension.
  const TPoly& reduced() const noexcept { return red_; }
  /// Multiplicity Q(1) (0 for the zero module).
  std::int64_t multiplicity() const;

  std::int64_t value(int n) const;
  std::int64_t polynomial_value(int n) const;
  bool is_zero() const { return num_.is_zero(); }

 private:
  TPoly num_, red_;
  int nv_ = 0;
  int dim_ = -1;
};

/// Numerator of the Hilbert series of S/J for a monomial ideal J in num_vars variables.
TPoly monomial_numerator(std::vector<Monomial> gens, int num_vars);

/// Hilbert series of ambient / M.
HilbertSeries hilbert_series(const Submodule& M);
HilbertSeries hilbert_series(const ModulePresentation& M);

/// Height of the support of a module (ring dimension + 1 for the zero module).
int height(const ModulePresentation& M);
/// Height of an ideal (height of S/I).
int ideal_height(const Ideal& I);
/// Generic rank of a module over the ring (which must be a domain).
int generic_rank(const ModulePresentation& M);

struct CurveNumbers {
  std::int64_t degree;
  std::int64_t genus;
};
/// Degree and arithmetic genus from the Hilbert polynomial deg*n + 1 - g of a
/// one-dimensional projective scheme (dimension 2 series).
CurveNumbers curve_numbers(const HilbertSeries& h);

}  // namespace bil::modgb
