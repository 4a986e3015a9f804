#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bil/ring/field.hpp"
#include "bil/ring/polynomial.hpp"

namespace bil::ring {

/// Ambient graded ring: a polynomial ring k[x0..x{n-1}] or its quotient by one
/// homogeneous relation. The relation is stored as a normal form generator; all
/// element arithmetic happens in the ambient polynomial ring and callers reduce
/// by the relation where the quotient matters.
class RingContext {
 public:
  static std::shared_ptr<const RingContext> polynomial(std::uint32_t p, int num_vars);
  /// Throws Errc::InvalidArgument unless the relation is homogeneous of positive
  /// degree. Irreducibility is certified separately by modgb::make_hypersurface.
  static std::shared_ptr<const RingContext> hypersurface(std::uint32_t p, int num_vars,
                                                         Polynomial relation);
  /// ℙ³ over GF(p).
  static std::shared_ptr<const RingContext> p3(std::uint32_t p = 32003) { return polynomial(p, 4); }

  const Field& field() const noexcept { return field_; }
  int num_vars() const noexcept { return num_vars_; }
  const std::optional<Polynomial>& relation() const noexcept { return relation_; }
  bool is_quotient() const noexcept { return relation_.has_value(); }
  int relation_degree() const noexcept { return relation_ ? *relation_->degree() : 0; }
  int canonical_twist() const noexcept { return canonical_twist_; }
  /// Krull dimension of the ring.
  int dim() const noexcept { return dim_; }

  /// The same ring without its relation (the ambient polynomial ring).
  std::shared_ptr<const RingContext> ambient() const;

  Polynomial var(int i) const { return Polynomial::monomial(Monomial::variable(i)); }
  /// Normal form modulo the relation (identity on the polynomial ring).
  Polynomial normalize(const Polynomial& f) const;

  /// All monomials of the given degree, decreasing in degrevlex.
  std::vector<Monomial> monomials_of_degree(int d) const;
  /// Uniformly random form of degree d (normalized modulo the relation).
  Polynomial random_form(int d, std::mt19937_64& rng) const;

  bool same_as(const RingContext& o) const;

 private:
  RingContext() = default;
  Field field_;
  int num_vars_ = 0;
  std::optional<Polynomial> relation_;
  int canonical_twist_ = 0;
  int dim_ = 0;
};

using RingPtr = std::shared_ptr<const RingContext>;

Scalar random_scalar(const Field& F, std::mt19937_64& rng);
Scalar random_nonzero_scalar(const Field& F, std::mt19937_64& rng);

}  // namespace bil::ring
