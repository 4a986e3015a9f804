#pragma once

#include <optional>
#include <vector>

#include "bil/ring/field.hpp"
#include "bil/ring/monomial.hpp"

namespace bil::ring {

struct PTerm {
  Monomial mono;
  Scalar coef;
  bool operator==(const PTerm&) const = default;
};

/// Sparse polynomial; terms strictly decreasing in degrevlex, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  /// Takes arbitrary terms, sorts and combines them.
  Polynomial(std::vector<PTerm> terms, const Field& F);

  static Polynomial constant(Scalar c);
  static Polynomial monomial(const Monomial& m, Scalar c = 1);
  static Polynomial from_sorted(std::vector<PTerm> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<PTerm>& terms() const noexcept { return terms_; }
  const PTerm& leading() const { return terms_.front(); }

  /// Present iff the polynomial is homogeneous (the zero polynomial has none).
  std::optional<int> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }
  int max_degree() const { return is_zero() ? -1 : terms_.front().mono.degree(); }

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<PTerm> terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b, const Field& F);
Polynomial sub(const Polynomial& a, const Polynomial& b, const Field& F);
Polynomial mul(const Polynomial& a, const Polynomial& b, const Field& F);
Polynomial scale(const Polynomial& a, Scalar c, const Field& F);
Polynomial mul_term(const Polynomial& a, const Monomial& m, Scalar c, const Field& F);
Polynomial neg(const Polynomial& a, const Field& F);
/// a - c*m*b in one merge pass.
Polynomial sub_mul_term(const Polynomial& a, const Monomial& m, Scalar c, const Polynomial& b,
                        const Field& F);
Scalar evaluate(const Polynomial& a, std::span<const Scalar> point, const Field& F);

/// Normal form with respect to the single polynomial q ({q} is its own Gröbner basis).
Polynomial reduce_by(const Polynomial& a, const Polynomial& q, const Field& F);

}  // namespace bil::ring
