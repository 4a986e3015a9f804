#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bil/sheafcoh/sheafcoh.hpp"

namespace bil::liaison {

using modgb::FreeModule;
using modgb::GradedMatrix;
using modgb::Ideal;
using modgb::ModulePresentation;
using modgb::Vec;
using ring::Polynomial;
using ring::RingPtr;
using sheafcoh::CurveIdeal;
using sheafcoh::SheafModule;

/// 0 -> ⊕S(-a_i) -> N -> I_C(a) -> 0 with N extraverti.
struct NTypeResolution {
  CurveIdeal curve;
  int twist = 0;
  /// a_1 <= ... <= a_r
  std::vector<int> L_twists;
  SheafModule N;
  /// ⊕S(-a_i) -> cover(N); column i is the section s_i.
  GradedMatrix sections;
  /// cover(N) -> S(twist), a single row.
  GradedMatrix surjection;

  int r() const { return static_cast<int>(L_twists.size()); }
  const Vec& section(int i) const { return sections.column(i); }
};

/// The extension 0 -> L -> F -> E -> 0 built from generators of Ext^1(E, S).
struct Extraverti {
  SheafModule F;
  std::vector<int> L_twists;
  /// ⊕S(-a_i) -> cover(F), twists ascending.
  GradedMatrix sections;
  /// cover(F) -> cover(E).
  GradedMatrix to_input;
  /// Images in cover(F) of the elements passed as lifts (placed in the E summand).
  std::vector<Vec> lifted;
};
Extraverti extraverti_extension(const SheafModule& E, const std::vector<Vec>& lifts = {});
SheafModule build_extraverti(const SheafModule& E);

struct ExtravertiCheck {
  bool ext1_zero = false;
  bool condition_t = false;
  bool h1_preserved = false;
  bool ok() const { return ext1_zero && condition_t && h1_preserved; }
};
ExtravertiCheck verify_extraverti(const SheafModule& input, const SheafModule& F);

NTypeResolution n_type_resolution(const CurveIdeal& C, int twist = 0);
/// Exactness of 0 -> L -> N -> I_C(a) -> 0, checked with syzygies.
bool verify_exact(const NTypeResolution& R);

/// P with the given elements of its cover added as relations.
ModulePresentation quotient_by(const ModulePresentation& P, const std::vector<Vec>& sections);
/// Uniformly random element of degree d of a free module.
Vec random_element(const FreeModule& F, int d, std::mt19937_64& rng);

struct Feasibility {
  bool feasible = false;
  /// The degree-d sections generate a subsheaf of rank >= 1 at every codimension one point.
  bool a_holds = false;
  bool b_holds = false;
  /// Height of the common vanishing locus of W in the dual.
  int vanishing_height = 0;
  int rank_E0 = 0;
  int dim_W = 0;
  std::string note;
};
/// Sections of degree d against the torsion-free, codimension one criterion.
Feasibility section_quotient_feasible(const SheafModule& E, int d, std::uint64_t seed = 1);
/// Same on a raw presentation of known rank (its elements are taken as the sections).
Feasibility section_quotient_feasible(const ModulePresentation& E, int rank, int d, std::uint64_t seed = 1);

struct SectionQuotient {
  Vec section;
  int degree = 0;
  /// E with the section added as a relation, over E's cover.
  ModulePresentation raw;
  SheafModule quotient;
  int attempts = 0;
};
SectionQuotient general_section_quotient(const SheafModule& E, int d, std::uint64_t seed, int retries = 32);
SectionQuotient general_section_quotient(const ModulePresentation& E, int rank, int d, std::uint64_t seed,
                                         int retries = 32);

struct BiliaisonStep {
  CurveIdeal from, to;
  int from_twist = 0, to_twist = 0;
  int surface_degree = 0;
  int height = 0;
  Polynomial surface;
  /// Rank two certificate with E/(s) = I_from(from_twist), E/(t) = I_to(to_twist).
  SheafModule E;
  Vec s, t;
  int s_degree = 0, t_degree = 0;
  bool identity = false;
  bool degree_law = false;
  bool rao_shift = false;
  /// A I_from + (F) and B I_to + (F) agree up to saturation for a pair of forms.
  bool linear_equivalence = false;
  std::optional<bool> rao_iso;
  std::string origin;
  bool verified() const { return degree_law && rao_shift && linear_equivalence && rao_iso.value_or(true); }
};

BiliaisonStep elementary_biliaison_rank2(const SheafModule& E, const Vec& s, const Vec& t, std::uint64_t seed = 1,
                                         bool check_iso = false);
/// Raw rank two presentation; s and t live in its cover.
BiliaisonStep elementary_biliaison_rank2(const ModulePresentation& E, const Vec& s, const Vec& t,
                                         std::uint64_t seed = 1, bool check_iso = false);

/// Both ideals contain F, A and B are nonzerodivisors mod F, and
/// (A I1 + (F))^sat == (B I2 + (F))^sat.
bool linear_equivalence_holds(const Ideal& I1, const Ideal& I2, const Polynomial& F, const Polynomial& A,
                              const Polynomial& B);
/// Step V1 -> V2 of height deg A - deg B on {F} from a linear equivalence,
/// with the fibered product of I_V1 and I_V2(h) over O_Y as certificate.
BiliaisonStep step_from_linear_equivalence(const CurveIdeal& V1, const CurveIdeal& V2, const Polynomial& F,
                                           const Polynomial& A, const Polynomial& B, std::uint64_t seed = 1,
                                           bool check_iso = false);

struct BdlResult {
  CurveIdeal curve;
  Polynomial g;
  BiliaisonStep step;
};
/// I' = (g I_C + (f))^sat with g a random form of degree h.
BdlResult basic_double_link(const CurveIdeal& C, const Polynomial& f, int h, std::uint64_t seed,
                            bool check_iso = false);

/// N-type resolutions of step.from and step.to sharing one extraverti module.
std::pair<NTypeResolution, NTypeResolution> shared_resolutions(const BiliaisonStep& step);

/// W admits a descending step when V's twists drop below W's at the first difference.
BiliaisonStep descending_step(const NTypeResolution& A, const NTypeResolution& B, std::uint64_t seed);
/// Self comparison: replace t_k (0-based) by a general section of degree d < b_k.
BiliaisonStep descending_step(const NTypeResolution& B, int k, int d, std::uint64_t seed);

/// A surjection of modules given on covers.
struct PsiMap {
  ModulePresentation source, target;
  GradedMatrix map;
};
/// Generator degrees of the kernel; throws KernelNotDissocie unless it is free.
std::vector<int> dissocie_kernel(const PsiMap& f);

struct PsiMeet {
  SheafModule F;
  PsiMap to_first, to_second;
  /// Generator degrees of the kernels of the two projections.
  std::vector<int> kernel_first, kernel_second;
};
PsiMeet psi_meet(const PsiMap& f1, const PsiMap& f2);

struct DescentLog {
  CurveIdeal start, terminal;
  std::vector<BiliaisonStep> steps;
  /// A descending step reached the empty scheme and the complete intersection moves were used.
  bool passed_empty = false;
  bool ci_class = false;
  /// Section degrees tried without success at the terminal curve.
  std::vector<std::string> minimality;
  std::vector<std::string> trail;
};
DescentLog descend_to_minimal(const CurveIdeal& C, std::uint64_t seed = 1);

struct EquivalenceDecision {
  enum class Kind { equivalent, inequivalent, inconclusive };
  Kind kind = Kind::inconclusive;
  /// rao(C2) ≅ rao(C1)(-shift)
  int shift = 0;
  bool acm_class = false;
  std::string reason;
};
EquivalenceDecision same_biliaison_class(const CurveIdeal& C1, const CurveIdeal& C2, std::uint64_t seed = 1);
std::string to_string(EquivalenceDecision::Kind k);

struct ConnectResult {
  std::vector<BiliaisonStep> steps;
  std::vector<int> twists;
};
/// Height zero chain from V to W through a common section, when both have
/// N-type resolutions over one module with equal twists.
ConnectResult connect_minimal(const CurveIdeal& V, const CurveIdeal& W, std::uint64_t seed = 1);

}  // namespace bil::liaison
