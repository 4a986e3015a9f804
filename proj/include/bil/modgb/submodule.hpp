#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "bil/modgb/groebner.hpp"
#include "bil/modgb/matrix.hpp"

namespace bil::modgb {

/// Reduced Gröbner basis of a submodule (over a quotient ring it contains the
/// relation multiples q*e_i as well).
struct GroebnerBasis {
  FreeModule ambient;
  Reducer reducer;

  const std::vector<Vec>& elements() const noexcept { return reducer.basis(); }
  Vec normal_form(const Vec& v) const { return reducer.reduce(v, reduction_fault()); }
};

/// Homogeneous submodule of a graded free module, with a write-once cached basis.
class Submodule {
 public:
  Submodule() = default;
  /// Throws NonHomogeneous for inhomogeneous generators. Zero generators are dropped.
  Submodule(FreeModule ambient, std::vector<Vec> gens);
  static Submodule from_columns(const GradedMatrix& m);
  /// Ideal of S (ambient S with generator degree 0).
  static Submodule ideal(const RingPtr& ring, const std::vector<Polynomial>& gens);
  static Submodule unit_ideal(const RingPtr& ring);
  /// The whole free module.
  static Submodule everything(const FreeModule& F);

  const FreeModule& ambient() const noexcept { return ambient_; }
  const RingPtr& ring() const noexcept { return ambient_.ring(); }
  const std::vector<Vec>& generators() const noexcept { return gens_; }
  /// Component-0 polynomials of the generators (the ideal case).
  std::vector<Polynomial> polys() const;
  /// Columns = generators, source degrees = generator degrees.
  GradedMatrix matrix() const;

  const GroebnerBasis& gb() const;
  Vec normal_form(const Vec& v) const { return gb().normal_form(v); }
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Vec& v) const { return normal_form(v).is_zero(); }
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Submodule& o) const;
  bool equals(const Submodule& o) const { return contains(o) && o.contains(*this); }
  /// Zero as a submodule over the ring (all generators vanish mod the relation).
  bool is_zero() const;
  /// Equal to the ambient free module.
  bool is_everything() const;
  bool is_unit_ideal() const { return is_everything(); }

 private:
  struct State {
    std::once_flag once;
    std::unique_ptr<GroebnerBasis> gb;
  };
  FreeModule ambient_;
  std::vector<Vec> gens_;
  std::shared_ptr<State> state_ = std::make_shared<State>();
};

using Ideal = Submodule;

/// Inputs for the engine: generators plus q*e_i backgrounds over a quotient ring.
std::vector<GBInput> engine_inputs(const FreeModule& F, const std::vector<Vec>& gens);

/// Cokernel of a degree-0 map into the free cover.
class ModulePresentation {
 public:
  ModulePresentation() = default;
  explicit ModulePresentation(GradedMatrix relations);
  static ModulePresentation free(const FreeModule& F);
  /// S/I (a cyclic module generated in degree 0).
  static ModulePresentation quotient(const Ideal& I);
  /// The submodule itself as a module, presented by its generators and syzygies.
  static ModulePresentation of_submodule(const Submodule& M);

  const FreeModule& cover() const noexcept { return rel_.target(); }
  const GradedMatrix& relations() const noexcept { return rel_; }
  const RingPtr& ring() const noexcept { return rel_.target().ring(); }
  const Submodule& relation_module() const noexcept { return relmod_; }
  int num_generators() const noexcept { return cover().rank(); }

  bool is_zero() const { return relmod_.is_everything(); }
  /// M(s).
  ModulePresentation shifted(int s) const;
  ModulePresentation direct_sum(const ModulePresentation& o) const;
  Vec normal_form(const Vec& v) const { return relmod_.normal_form(v); }

 private:
  GradedMatrix rel_;
  Submodule relmod_;
};

}  // namespace bil::modgb
