#include "bil/ring/polynomial.hpp"

#include <algorithm>

namespace bil::ring {

Polynomial::Polynomial(std::vector<PTerm> terms, const Field& F) {
  std::sort(terms.begin(), terms.end(), [](const PTerm& a, const PTerm& b) { return a.mono > b.mono; });
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = F.add(terms_.back().coef, t.coef);
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (t.coef != 0) {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::constant(Scalar c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, Scalar c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

Polynomial sub_mul_term(const Polynomial& a, const Monomial& m, Scalar c, const Polynomial& b,
                        const Field& F) {
  std::vector<PTerm> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  Scalar nc = F.neg(c);
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.push_back(ta[i++]);
      continue;
    }
    Monomial mb = tb[j].mono * m;
    if (i == ta.size() || mb > ta[i].mono) {
      Scalar v = F.mul(nc, tb[j].coef);
      if (v) out.push_back({mb, v});
      ++j;
    } else if (ta[i].mono > mb) {
      out.push_back(ta[i++]);
    } else {
      Scalar v = F.add(ta[i].coef, F.mul(nc, tb[j].coef));
      if (v) out.push_back({mb, v});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted(std::move(out));
}

Polynomial add(const Polynomial& a, const Polynomial& b, const Field& F) {
  return sub_mul_term(a, Monomial{}, F.neg(1), b, F);
}

Polynomial sub(const Polynomial& a, const Polynomial& b, const Field& F) {
  return sub_mul_term(a, Monomial{}, 1, b, F);
}

Polynomial scale(const Polynomial& a, Scalar c, const Field& F) {
  if (c == 0) return {};
  std::vector<PTerm> out(a.terms());
  for (auto& t : out) t.coef = F.mul(t.coef, c);
  return Polynomial::from_sorted(std::move(out));
}

Polynomial neg(const Polynomial& a, const Field& F) { return scale(a, F.neg(1), F); }

Polynomial mul_term(const Polynomial& a, const Monomial& m, Scalar c, const Field& F) {
  if (c == 0) return {};
  std::vector<PTerm> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.mono * m, F.mul(t.coef, c)});
  return Polynomial::from_sorted(std::move(out));
}

Polynomial mul(const Polynomial& a, const Polynomial& b, const Field& F) {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& big = a.size() <= b.size() ? b : a;
  Polynomial acc;
  for (const auto& t : small.terms()) acc = sub_mul_term(acc, t.mono, F.neg(t.coef), big, F);
  return acc;
}

Scalar evaluate(const Polynomial& a, std::span<const Scalar> point, const Field& F) {
  Scalar acc = 0;
  for (const auto& t : a.terms()) {
    Scalar v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i) {
      int e = t.mono.exponent(static_cast<int>(i));
      if (e) v = F.mul(v, F.pow(point[i], e));
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial reduce_by(const Polynomial& a, const Polynomial& q, const Field& F) {
  if (q.is_zero()) return a;
  const Monomial lm = q.leading().mono;
  const Scalar lc_inv = F.inv(q.leading().coef);
  std::vector<PTerm> done;
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const PTerm lead = rest.leading();
    if (lm.divides(lead.mono)) {
      rest = sub_mul_term(rest, lead.mono / lm, F.mul(lead.coef, lc_inv), q, F);
    } else {
      done.push_back(lead);
      std::vector<PTerm> tail(rest.terms().begin() + 1, rest.terms().end());
      rest = Polynomial::from_sorted(std::move(tail));
    }
  }
  return Polynomial::from_sorted(std::move(done));
}

}  // namespace bil::ring
