#pragma once

#include <random>
#include <vector>

#include "bil/modgb/hilbert.hpp"
#include "bil/modgb/submodule.hpp"

namespace bil::modgb {

/// Reduced Gröbner basis as a generating matrix (ascending leading terms).
GradedMatrix groebner_basis(const Submodule& M);
Vec normal_form(const Vec& v, const Submodule& M);

/// Indices of a minimal generating subset of the given vectors (over a
/// quotient ring: minimal modulo the relation).
std::vector<int> minimal_generator_indices(const FreeModule& F, const std::vector<Vec>& gens);
/// Keeps a minimal subset of columns, normalized modulo the ring relation.
GradedMatrix minimal_columns(const GradedMatrix& m);
/// Minimal generators of a submodule.
Submodule minimalize(const Submodule& M);

/// Generators of ker(m). With minimal = true the columns form a minimal generating set.
GradedMatrix syzygy_module(const GradedMatrix& m, bool minimal = true);
/// { x in source(A) : A x in image(R) }; A and R share a target.
GradedMatrix kernel_modulo(const GradedMatrix& A, const GradedMatrix& R, bool minimal = true);

Submodule intersect(const Submodule& a, const Submodule& b);
/// {v in F : I v ⊆ M} for a submodule M of F and an ideal I.
Submodule colon(const Submodule& M, const Ideal& I);
/// {f in S : f N ⊆ M} for submodules of the same free module.
Ideal colon_ideal(const Submodule& M, const Submodule& N);
/// Annihilator of a module.
Ideal annihilator(const ModulePresentation& M);
/// The irrelevant ideal (x0, ..., x{n-1}).
Ideal irrelevant_ideal(const RingPtr& ring);
/// M : m^infinity. Ideals use a general linear form in the last variable slot
/// (verified through the Hilbert polynomial), modules iterate the colon.
Submodule saturate(const Submodule& M);
bool is_saturated(const Submodule& M);

struct Pruned {
  ModulePresentation pres;
  /// Old generator indices kept, in order (new generator k is old generator kept[k]).
  std::vector<int> kept;
  /// Image of every old generator in the new cover.
  std::vector<Vec> old_to_new;
};
/// Minimal presentation: unit entries eliminated, relations minimalized.
Pruned prune(const ModulePresentation& M);

struct Subquotient {
  ModulePresentation pres;
  /// elements[k] in the ambient free module represents new generator k.
  std::vector<Vec> elements;
};
/// (image K + image R0) / image R0 for matrices into the same free module.
Subquotient subquotient(const GradedMatrix& K, const GradedMatrix& R0);

/// Ideal of (n - r)-minors of a presentation matrix with n generators.
Ideal fitting_ideal(const ModulePresentation& M, int r);

/// Hypersurface ring after certifying that the relation defines a normal
/// domain (height of (q, dq/dx_i) at least 3 in the polynomial ring).
RingPtr make_hypersurface(std::uint32_t p, int num_vars, const Polynomial& q);
Polynomial derivative(const Polynomial& f, int var, const Field& F);

/// Linear change of variables: x_i -> images[i].
Polynomial substitute_linear(const Polynomial& f, const std::vector<Polynomial>& images, const Field& F);

/// Degree-d part of a free module: monomial vectors m*e_i, decreasing.
std::vector<Vec> free_basis_in_degree(const FreeModule& F, int d);
/// Basis of (F / M)_d given by standard monomial vectors.
std::vector<Vec> standard_basis_in_degree(const Submodule& M, int d);

}  // namespace bil::modgb
