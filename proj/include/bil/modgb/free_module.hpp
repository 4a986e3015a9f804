#pragma once

#include <optional>
#include <vector>

#include "bil/ring/ring_context.hpp"

namespace bil::modgb {

using ring::Field;
using ring::Monomial;
using ring::Polynomial;
using ring::RingPtr;
using ring::Scalar;

/// Graded free module ⊕ S(-d_i), stored by its generator degrees d_i.
/// The twist a_i of the summand S(a_i) is -d_i.
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr ring, std::vector<int> degrees) : ring_(std::move(ring)), degrees_(std::move(degrees)) {}
  static FreeModule from_twists(RingPtr ring, const std::vector<int>& twists);

  const RingPtr& ring() const noexcept { return ring_; }
  int rank() const noexcept { return static_cast<int>(degrees_.size()); }
  int degree(int i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::vector<int> twists() const;

  /// F(s): generator degrees lowered by s.
  FreeModule shifted(int s) const;
  /// Hom(F, S(t)): generator degrees -d_i - t.
  FreeModule dual(int t = 0) const;
  FreeModule direct_sum(const FreeModule& o) const;
  FreeModule subset(const std::vector<int>& indices) const;

  bool operator==(const FreeModule& o) const { return degrees_ == o.degrees_; }

 private:
  RingPtr ring_;
  std::vector<int> degrees_;
};

struct MTerm {
  Monomial mono;
  int comp;
  Scalar coef;
  bool operator==(const MTerm&) const = default;
};

/// Term-over-position: monomial first (degrevlex), then lower component index first.
inline bool term_greater(const Monomial& am, int ac, const Monomial& bm, int bc) noexcept {
  if (am.key() != bm.key()) return am.key() > bm.key();
  return ac < bc;
}

/// Element of a free module: terms strictly decreasing in the module order.
class Vec {
 public:
  Vec() = default;
  Vec(std::vector<MTerm> terms, const Field& F);
  static Vec from_sorted(std::vector<MTerm> terms) {
    Vec v;
    v.terms_ = std::move(terms);
    return v;
  }
  static Vec unit(int comp, Scalar c = 1) { return from_sorted({{Monomial{}, comp, c}}); }
  static Vec from_polynomial(const Polynomial& p, int comp);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<MTerm>& terms() const noexcept { return terms_; }
  std::vector<MTerm>& mutable_terms() noexcept { return terms_; }
  const MTerm& leading() const { return terms_.front(); }

  /// Polynomial coefficient of basis vector e_comp.
  Polynomial component(int comp) const;
  int max_comp() const;

  bool operator==(const Vec&) const = default;

 private:
  std::vector<MTerm> terms_;
};

/// a - c*m*b.
Vec sub_mul(const Vec& a, const Monomial& m, Scalar c, const Vec& b, const Field& F);
Vec add(const Vec& a, const Vec& b, const Field& F);
Vec sub(const Vec& a, const Vec& b, const Field& F);
Vec scale(const Vec& a, Scalar c, const Field& F);
Vec mul_term(const Vec& a, const Monomial& m, Scalar c, const Field& F);
Vec mul_poly(const Vec& a, const Polynomial& p, const Field& F);
/// Renumber components: comp -> offset + comp.
Vec shift_components(const Vec& a, int offset);
/// Keep components in [lo, hi), renumbered to start at 0.
Vec restrict_components(const Vec& a, int lo, int hi);
/// Reduce every coefficient polynomial modulo the ring relation.
Vec normalize(const Vec& a, const ring::RingContext& R);

/// Degree of a homogeneous vector with respect to the generator degrees,
/// empty for zero or inhomogeneous vectors.
std::optional<int> vec_degree(const Vec& v, const FreeModule& F);

}  // namespace bil::modgb
