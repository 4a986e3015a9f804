#include "bil/ring/ring_context.hpp"

#include <functional>

#include "bil/error.hpp"

namespace bil::ring {

std::shared_ptr<const RingContext> RingContext::polynomial(std::uint32_t p, int num_vars) {
  if (num_vars < 1 || num_vars > Monomial::kMaxVars)
    throw Error(Errc::InvalidArgument, "number of variables must be in [1, 7]");
  auto r = std::shared_ptr<RingContext>(new RingContext());
  r->field_ = Field(p);
  r->num_vars_ = num_vars;
  r->canonical_twist_ = -num_vars;
  r->dim_ = num_vars;
  return r;
}

std::shared_ptr<const RingContext> RingContext::hypersurface(std::uint32_t p, int num_vars,
                                                             Polynomial relation) {
  auto base = polynomial(p, num_vars);
  auto d = relation.degree();
  if (!d || *d < 1) throw Error(Errc::InvalidArgument, "relation must be homogeneous of positive degree");
  for (const auto& t : relation.terms())
    for (int v = num_vars; v < Monomial::kMaxVars; ++v)
      if (t.mono.exponent(v)) throw Error(Errc::UnknownVariable, "relation uses a variable outside the ring");
  auto r = std::shared_ptr<RingContext>(new RingContext(*base));
  // monic relation
  relation = scale(relation, r->field_.inv(relation.leading().coef), r->field_);
  r->relation_ = std::move(relation);
  r->canonical_twist_ = *d - num_vars;
  r->dim_ = num_vars - 1;
  return r;
}

std::shared_ptr<const RingContext> RingContext::ambient() const {
  return polynomial(field_.characteristic(), num_vars_);
}

Polynomial RingContext::normalize(const Polynomial& f) const {
  if (!relation_) return f;
  return reduce_by(f, *relation_, field_);
}

std::vector<Monomial> RingContext::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<int> e(num_vars_, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == num_vars_ - 1) {
      e[var] = left;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      rec(var + 1, left - k);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Scalar random_scalar(const Field& F, std::mt19937_64& rng) {
  return static_cast<Scalar>(rng() % F.characteristic());
}

Scalar random_nonzero_scalar(const Field& F, std::mt19937_64& rng) {
  return static_cast<Scalar>(1 + rng() % (F.characteristic() - 1));
}

Polynomial RingContext::random_form(int d, std::mt19937_64& rng) const {
  std::vector<PTerm> terms;
  for (const auto& m : monomials_of_degree(d)) terms.push_back({m, random_scalar(field_, rng)});
  return normalize(Polynomial(std::move(terms), field_));
}

bool RingContext::same_as(const RingContext& o) const {
  return field_ == o.field_ && num_vars_ == o.num_vars_ && relation_ == o.relation_;
}

}  // namespace bil::ring
