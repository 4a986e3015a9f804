#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "bil/modgb/free_module.hpp"

namespace bil::modgb {

struct GBInput {
  Vec v;
  /// Background inputs (relation multiples over a quotient ring) never count
  /// as minimal generators.
  bool background = false;
};

struct GBOptions {
  /// Record traces and the syzygies of the inputs.
  bool track = false;
  /// Interreduce the final basis.
  bool reduce = true;
  int max_degree = std::numeric_limits<int>::max();
};

struct GBResult {
  /// Monic basis sorted ascending by leading term.
  std::vector<Vec> basis;
  /// basis[i] = sum over inputs j of traces[i]_j * input_j (only when tracking).
  std::vector<Vec> traces;
  /// Indices of non-background inputs forming a minimal generating set.
  std::vector<int> minimal;
  /// Generators of the syzygies of the inputs, in input coordinates.
  std::vector<Vec> syzygies;
  bool complete = true;
};

/// Homogeneous Buchberger algorithm, degree by degree. Within a degree: S-pairs,
/// then background inputs, then the remaining inputs by index.
GBResult run_groebner(const FreeModule& F, const std::vector<GBInput>& inputs, const GBOptions& opt = {});

/// Harness hook: membership normal forms ignore the newest basis element, so
/// that a selftest can prove it notices a broken engine.
void set_reduction_fault(bool on);
bool reduction_fault();

/// Leading-term lookup used for full reduction against a fixed monic basis.
class Reducer {
 public:
  Reducer() = default;
  Reducer(const Field& F, int rank);
  void add(const Vec& monic);
  /// Full normal form with respect to the basis added so far.
  Vec reduce(const Vec& v, bool skip_newest = false) const;
  /// Full reduction that also records trace -= c*m*traces[k] per step.
  Vec reduce_traced(const Vec& v, Vec& trace, const std::vector<Vec>& traces) const;
  int find(const Monomial& m, int comp) const;
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  /// Leading monomials by component.
  std::vector<std::vector<Monomial>> leading_monomials(int rank) const;

 private:
  Field field_;
  std::vector<Vec> basis_;
  std::vector<std::vector<std::pair<Monomial, int>>> by_comp_;
};

}  // namespace bil::modgb
