#include "bil/modgb/submodule.hpp"

#include "bil/error.hpp"
#include "bil/modgb/ops.hpp"

namespace bil::modgb {

Submodule::Submodule(FreeModule ambient, std::vector<Vec> gens) : ambient_(std::move(ambient)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!vec_degree(g, ambient_)) throw Error(Errc::NonHomogeneous, "submodule generator is not homogeneous");
    gens_.push_back(std::move(g));
  }
}

Submodule Submodule::from_columns(const GradedMatrix& m) { return Submodule(m.target(), m.columns()); }

Submodule Submodule::ideal(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<Vec> v;
  for (const auto& g : gens) v.push_back(Vec::from_polynomial(g, 0));
  return Submodule(FreeModule(ring, {0}), std::move(v));
}

Submodule Submodule::unit_ideal(const RingPtr& ring) { return ideal(ring, {Polynomial::constant(1)}); }

Submodule Submodule::everything(const FreeModule& F) {
  std::vector<Vec> v;
  for (int i = 0; i < F.rank(); ++i) v.push_back(Vec::unit(i));
  return Submodule(F, std::move(v));
}

std::vector<Polynomial> Submodule::polys() const {
  std::vector<Polynomial> out;
  for (const auto& g : gens_) out.push_back(g.component(0));
  return out;
}

GradedMatrix Submodule::matrix() const {
  std::vector<int> deg;
  for (const auto& g : gens_) deg.push_back(*vec_degree(g, ambient_));
  return GradedMatrix(ambient_, FreeModule(ring(), deg), gens_);
}

std::vector<GBInput> engine_inputs(const FreeModule& F, const std::vector<Vec>& gens) {
  std::vector<GBInput> in;
  for (const auto& g : gens) in.push_back({g, false});
  const auto& R = *F.ring();
  if (R.is_quotient())
    for (int i = 0; i < F.rank(); ++i) in.push_back({Vec::from_polynomial(*R.relation(), i), true});
  return in;
}

const GroebnerBasis& Submodule::gb() const {
  std::call_once(state_->once, [this] {
    GBResult r = run_groebner(ambient_, engine_inputs(ambient_, gens_));
    auto g = std::make_unique<GroebnerBasis>();
    g->ambient = ambient_;
    g->reducer = Reducer(ring()->field(), ambient_.rank());
    for (auto& b : r.basis) g->reducer.add(b);
    state_->gb = std::move(g);
  });
  return *state_->gb;
}

Polynomial Submodule::normal_form(const Polynomial& f) const {
  return normal_form(Vec::from_polynomial(f, 0)).component(0);
}

bool Submodule::contains(const Submodule& o) const {
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Submodule::is_zero() const {
  for (const auto& g : gens_)
    if (!normalize(g, *ring()).is_zero()) return false;
  return true;
}

bool Submodule::is_everything() const {
  for (int i = 0; i < ambient_.rank(); ++i)
    if (!contains(Vec::unit(i))) return false;
  return true;
}

ModulePresentation::ModulePresentation(GradedMatrix relations)
    : rel_(std::move(relations)), relmod_(Submodule::from_columns(rel_)) {}

ModulePresentation ModulePresentation::free(const FreeModule& F) {
  return ModulePresentation(GradedMatrix(F, FreeModule(F.ring(), {})));
}

ModulePresentation ModulePresentation::quotient(const Ideal& I) { return ModulePresentation(I.matrix()); }

ModulePresentation ModulePresentation::of_submodule(const Submodule& M) {
  GradedMatrix g = M.matrix();
  return ModulePresentation(syzygy_module(g));
}

ModulePresentation ModulePresentation::shifted(int s) const { return ModulePresentation(rel_.shifted(s)); }

ModulePresentation ModulePresentation::direct_sum(const ModulePresentation& o) const {
  return ModulePresentation(modgb::direct_sum(rel_, o.rel_));
}

}  // namespace bil::modgb
