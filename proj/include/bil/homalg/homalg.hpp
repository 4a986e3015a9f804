#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bil/kernels/dense.hpp"
#include "bil/modgb/ops.hpp"

namespace bil::homalg {

using kernels::DenseMatrix;
using modgb::FreeModule;
using modgb::GradedMatrix;
using modgb::HilbertSeries;
using modgb::Ideal;
using modgb::ModulePresentation;
using modgb::Submodule;
using modgb::Vec;
using ring::Polynomial;
using ring::RingPtr;

/// 0 <- F0 <-d1- F1 <-d2- ... ; d[i] is d_{i+1}.
struct FreeResolution {
  RingPtr ring;
  ModulePresentation resolved;
  FreeModule F0;
  std::vector<GradedMatrix> d;

  int length() const { return static_cast<int>(d.size()); }
  const FreeModule& free(int i) const { return i == 0 ? F0 : d[i - 1].source(); }
  bool is_minimal() const;
};

/// Minimal resolution. Over the polynomial ring it always terminates; over a
/// quotient ring it throws CapExceeded unless it terminates within cap steps.
FreeResolution minimal_free_resolution(const ModulePresentation& M, int cap = -1);
/// The first `steps` differentials of a minimal resolution (no exactness claim at the end).
FreeResolution partial_resolution(const ModulePresentation& M, int steps);

struct BettiTable {
  std::map<std::pair<int, int>, int> b;  // (i, j) -> beta_{i,j}
  int at(int i, int j) const;
  int total(int i) const;
  bool empty() const { return b.empty(); }
  bool operator==(const BettiTable&) const = default;
  std::string to_string() const;
};

/// Throws NotMinimal when a differential has a unit entry.
BettiTable betti_table(const FreeResolution& R);

std::int64_t hilbert_function(const ModulePresentation& M, int n);

/// Hilbert polynomial with rational coefficients num[k] / den of n^k.
struct HilbertPolynomial {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
  std::int64_t operator()(int n) const;
  std::string to_string() const;
};
HilbertPolynomial hilbert_polynomial(const ModulePresentation& M);

/// Hom(A, B): elements are matrices G0 x F0 written as vectors over
/// Hom(F0, G0) with index k * rank(F0) + i for the entry (g_k, f_i).
struct HomModule {
  modgb::Subquotient sq;
  FreeModule F0, G0;
  GradedMatrix as_matrix(const Vec& element) const;
  /// Hom(F0, G0) as a free module.
  FreeModule hom_free() const;
};
HomModule hom_presentation(const ModulePresentation& A, const ModulePresentation& B);

/// Ext^i(A, S(twist)) as a subquotient of F_i^dual(twist); cocycles[k] lives in
/// that free module and represents generator k.
struct ExtModule {
  ModulePresentation pres;
  std::vector<Vec> cocycles;
  FreeResolution res;
  int i = 0;
  int twist = 0;
  bool is_zero() const { return pres.cover().rank() == 0; }
};
ExtModule ext_module(const ModulePresentation& A, int i, int twist = 0);
ExtModule ext_module(const FreeResolution& res, int i, int twist = 0);

/// Finite length graded module stored by bases and multiplication matrices.
class FiniteLengthModule {
 public:
  FiniteLengthModule() = default;
  /// Throws NotFiniteLength if the module has positive dimension or too many basis vectors.
  static FiniteLengthModule from_presentation(const ModulePresentation& M, int max_total = 5000);
  /// actions[v][n] is the matrix of x_v : M_n -> M_{n+1} (dims[n+1] x dims[n]).
  static FiniteLengthModule from_linear_data(RingPtr ring, std::map<int, int> dims,
                                             std::vector<std::map<int, DenseMatrix>> actions);
  static FiniteLengthModule zero(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::map<int, int>& dims() const noexcept { return dims_; }
  int dim(int n) const;
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  int lo() const;
  int hi() const;
  /// Multiplication by x_v from degree n (zero-size matrices outside the support).
  DenseMatrix action(int v, int n) const;
  const ModulePresentation& presentation() const noexcept { return pres_; }
  /// M(s): M(s)_n = M_{n+s}.
  FiniteLengthModule shifted(int s) const;

 private:
  void build_presentation();
  RingPtr ring_;
  std::map<int, int> dims_;
  std::vector<std::map<int, DenseMatrix>> act_;
  ModulePresentation pres_;
};

/// M*_n = Hom_k(M_{-n}, k) with transposed actions.
FiniteLengthModule graded_dual(const FiniteLengthModule& M);

struct Extension {
  ModulePresentation E;
  /// L -> cover(E) and cover(E) -> cover(A).
  GradedMatrix from_L, to_A;
};
/// Extension 0 -> L -> E -> A -> 0 whose class is given by the cocycle xi : F1 -> L,
/// F1 the source of A's relation matrix. Throws NotACocycle.
Extension yoneda_extension(const ModulePresentation& A, const FreeModule& L, const GradedMatrix& xi);

/// Rows are the given Ext^1(A, S) cocycles (elements of F1^dual): the map
/// F1 -> L = (+) S(deg c) whose class is the tuple of cocycles.
GradedMatrix cocycle_map(const std::vector<Vec>& cocycles, const FreeModule& F1);

/// Connecting map of 0 -> L -> E -> A -> 0 evaluated on the relations of A:
/// lifts each relation column to E's cover and reads off its L part.
GradedMatrix connecting_cocycle(const Extension& ext, const ModulePresentation& A);

/// Euler characteristic check: sum (-1)^i HF(F_i, n) == HF(M, n) for n in [lo, hi].
bool euler_characteristic_holds(const FreeResolution& R, int lo, int hi);
/// d_i o d_{i+1} == 0 for every i.
bool is_complex(const FreeResolution& R);

/// Ext^i(A, S) vanishing test.
bool ext_vanishes(const ModulePresentation& A, int i);

}  // namespace bil::homalg
