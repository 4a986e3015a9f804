#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bil/homalg/homalg.hpp"

namespace bil::sheafcoh {

using homalg::DenseMatrix;
using homalg::ExtModule;
using homalg::FiniteLengthModule;
using homalg::FreeResolution;
using modgb::FreeModule;
using modgb::GradedMatrix;
using modgb::Ideal;
using modgb::ModulePresentation;
using modgb::Vec;
using ring::Polynomial;
using ring::RingPtr;

/// Saturated, unmixed, height two ideal of a curve in P^3 (or the unit ideal
/// for the empty scheme).
struct CurveIdeal {
  Ideal ideal;
  int degree = 0;
  int genus = 0;
  bool empty = false;
  /// False when the input had to be saturated.
  bool input_saturated = true;

  /// Saturates and validates; throws InvalidCurve on wrong height or embedded components.
  static CurveIdeal from_ideal(const Ideal& I);
  static CurveIdeal empty_curve(const RingPtr& ring);
  const RingPtr& ring() const { return ideal.ring(); }
};

/// A module with H^0_m = 0 standing for its sheaf.
class SheafModule {
 public:
  SheafModule() = default;
  /// Strips H^0_m(M) and prunes.
  static SheafModule from_presentation(const ModulePresentation& M);
  /// Same, and maps the given elements of M's cover into the new cover.
  /// kept receives the old index of every new generator.
  static SheafModule from_presentation(const ModulePresentation& M, std::vector<Vec>& carried,
                                       std::vector<int>* kept = nullptr);
  /// I(twist) as a module.
  static SheafModule of_ideal(const Ideal& I, int twist = 0);

  const ModulePresentation& module() const noexcept { return pres_; }
  const RingPtr& ring() const { return pres_.ring(); }
  int rank() const noexcept { return rank_; }
  /// Minimal resolution over the polynomial ring (cached).
  const FreeResolution& resolution() const;
  ExtModule ext(int i, int twist = 0) const;

 private:
  struct Cache;
  ModulePresentation pres_;
  int rank_ = 0;
  std::shared_ptr<Cache> cache_;
};

/// The same module regarded over the ambient polynomial ring of a hypersurface ring.
ModulePresentation to_ambient(const ModulePresentation& M);

/// H^1_*(E~) = Ext^{N-2}(E, S(-N))^dual, N the number of variables. Quotient
/// rings are handled over the ambient ring. Throws NotFiniteLength.
FiniteLengthModule h1_star(const SheafModule& E);
/// Ext^{N-3}(E, S(-N)); H^2(E~(n)) is dual to its degree -n part.
ModulePresentation h2_star_dual(const SheafModule& E);

FiniteLengthModule rao_module(const CurveIdeal& C);

struct ConditionTReport {
  int rank = 0;
  /// heights[i] = height of the support of Ext^i(E, S), i = 1..4 (5 when zero).
  std::vector<int> heights;
  bool t1 = false, t2 = false, t3 = false, t4 = true;
  /// depth >= 2, so E is the module of sections of its sheaf.
  bool depth_two = false;
  std::string note;
  bool ok() const { return t1 && t2 && t3 && t4; }
};
/// Over P^3's ring only (UnsupportedRing otherwise).
ConditionTReport check_condition_T(const SheafModule& E);
/// Same checks on a raw presentation without stripping H^0_m.
ConditionTReport check_condition_T(const ModulePresentation& M);

struct IdealAndTwist {
  CurveIdeal curve;
  int twist = 0;
  /// The embedding E -> S(twist) as a row matrix.
  GradedMatrix embedding;
};
/// E ≅ I_V(n) for a rank one module satisfying T.
IdealAndTwist module_to_ideal(const SheafModule& E);

struct RankOneEmbedding {
  /// 1 x n0 row: cover(M) -> S(twist).
  GradedMatrix row;
  int twist = 0;
  /// Saturation of the ideal of entries.
  Ideal ideal;
};
/// Generator of Hom(M, S), which must be free of rank one. No condition T check.
RankOneEmbedding rank_one_embedding(const ModulePresentation& M);

struct UnmixedReport {
  bool unmixed = false;
  Ideal hull;
};
/// I == ann Ext^2(S/I, S). Throws WrongHeight unless height(I) = 2.
UnmixedReport unmixed_check(const Ideal& I);

struct IsoResult {
  enum class Kind { isomorphic, not_isomorphic, inconclusive };
  Kind kind = Kind::inconclusive;
  /// B_n ≅ A_{n - shift}.
  int shift = 0;
  /// phi[n] : A_{n - shift} -> B_n
  std::map<int, DenseMatrix> phi;
  /// Dimension of the space of degree preserving homomorphisms at the shift.
  int hom_dim = 0;
};
/// Searches for an isomorphism B ≅ A(-shift) by random elements of the
/// homomorphism space. A fixed shift can be requested.
IsoResult iso_up_to_shift(const FiniteLengthModule& A, const FiniteLengthModule& B,
                          std::optional<int> shift = std::nullopt, std::uint64_t seed = 1, int tries = 8);

}  // namespace bil::sheafcoh
