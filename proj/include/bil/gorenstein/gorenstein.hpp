#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bil/sheafcoh/sheafcoh.hpp"

namespace bil::gorenstein {

using homalg::BettiTable;
using homalg::FiniteLengthModule;
using modgb::FreeModule;
using modgb::GradedMatrix;
using modgb::ModulePresentation;
using modgb::Vec;
using ring::RingPtr;
using sheafcoh::SheafModule;

/// P^3's ring or a hypersurface ring of dimension 4; UnsupportedRing otherwise.
void require_supported(const RingPtr& R);

/// The same linear data over another ring with the same variables.
FiniteLengthModule over_ring(const FiniteLengthModule& M, const RingPtr& R);
/// M* = Ext^4(M, S) = Hom_k(M, k)(-a), a the canonical twist of the ring.
FiniteLengthModule ext_dual(const FiniteLengthModule& M, const RingPtr& R);

/// Ext^1(E, S) = 0, over a hypersurface ring read off Ext^2 over the ambient ring.
bool ext1_vanishes(const ModulePresentation& E);

struct SecondSyzygy {
  SheafModule E;
  FreeModule L0, L1;
  FiniteLengthModule h1;
  bool hilbert_match = false;
  /// Isomorphism H^1_*(E) ≅ M found (unset when the search was inconclusive).
  std::optional<bool> h1_iso;
  bool ext1_zero = false;
  bool ok() const { return hilbert_match && h1_iso.value_or(true) && ext1_zero; }
};
/// 0 -> E -> L1 -> L0 -> M -> 0 over R, with the checks filled in.
SecondSyzygy second_syzygy(const FiniteLengthModule& M, const RingPtr& R);
/// Same; throws when a check fails.
SheafModule second_syzygy_sheaf(const FiniteLengthModule& M, const RingPtr& R);

/// 0 -> L -> F -> E -> 0 killing Ext^1(E, S), over either supported ring.
SheafModule extraverti_module(const SheafModule& E);

/// Hom(P, S) = ker(rho^T) for P = coker(rho).
struct DualModule {
  /// Generators of the dual inside cover(P)^dual.
  GradedMatrix K;
  ModulePresentation pres;
};
DualModule dual_module(const ModulePresentation& P);

struct GorensteinTriple {
  /// H^1_*(E).
  FiniteLengthModule M;
  /// Kernel of L1 -> L0, presented over the ring.
  ModulePresentation P;
  DualModule P_dual;
  /// Presentation of ext_dual(M).
  ModulePresentation M_star;
  /// cover(P_dual) -> cover(M_star), surjective.
  GradedMatrix alpha;
  SheafModule E;
  FreeModule L0, L1;
};
/// Throws NotExtraverti unless Ext^1(E, S) = 0.
GorensteinTriple mcm_triple(const SheafModule& E, std::uint64_t seed = 1);

/// Ext^i_T(P, T) = 0 for every i other than the codimension of the ring in T.
bool is_mcm(const ModulePresentation& P);
/// Images of the columns and the relations generate the target.
bool is_surjective(const GradedMatrix& f, const ModulePresentation& target);

/// E = E'^dual for 0 -> E' -> L1' -> L0' -> ker(alpha) -> 0. A nonzero seed adds a
/// random redundant generator to L0'.
SheafModule realize_triple(const FiniteLengthModule& M, const ModulePresentation& P, const GradedMatrix& alpha,
                           std::uint64_t seed = 0);

/// Generator degrees of a maximal free summand.
std::vector<int> free_summand_degrees(const ModulePresentation& M);
/// Betti table of the first steps with the free summands removed from column 0.
BettiTable stable_betti(const ModulePresentation& M, int steps);

struct StableComparison {
  enum class Kind { equivalent, not_equivalent, inconclusive };
  Kind kind = Kind::inconclusive;
  bool betti_equal = false;
  std::string reason;
};
/// For maximal Cohen-Macaulay modules: stable Betti tables, then an isomorphism
/// search between the first syzygies (which carry no free summands).
StableComparison stably_equivalent(const ModulePresentation& A, const ModulePresentation& B, int steps = 3,
                                   std::uint64_t seed = 1);

/// A degree preserving isomorphism cover(A) -> cover(B) found by random search.
std::optional<GradedMatrix> find_isomorphism(const ModulePresentation& A, const ModulePresentation& B,
                                             std::uint64_t seed = 1, int tries = 8);

struct RoundTrip {
  bool rao_iso = false;
  bool p_stable = false;
  bool e_betti = false;
  bool ok() const { return rao_iso && p_stable && e_betti; }
};
/// realize_triple of the triple, then mcm_triple again, compared with the input.
RoundTrip round_trip(const GorensteinTriple& t, std::uint64_t seed = 0);

std::string to_string(StableComparison::Kind k);

}  // namespace bil::gorenstein
