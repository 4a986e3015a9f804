#include "bil/modgb/free_module.hpp"

#include <algorithm>

namespace bil::modgb {

FreeModule FreeModule::from_twists(RingPtr ring, const std::vector<int>& twists) {
  std::vector<int> d(twists.size());
  for (std::size_t i = 0; i < twists.size(); ++i) d[i] = -twists[i];
  return FreeModule(std::move(ring), std::move(d));
}

std::vector<int> FreeModule::twists() const {
  std::vector<int> t(degrees_.size());
  for (std::size_t i = 0; i < degrees_.size(); ++i) t[i] = -degrees_[i];
  return t;
}

FreeModule FreeModule::shifted(int s) const {
  auto d = degrees_;
  for (auto& x : d) x -= s;
  return FreeModule(ring_, std::move(d));
}

FreeModule FreeModule::dual(int t) const {
  auto d = degrees_;
  for (auto& x : d) x = -x - t;
  return FreeModule(ring_, std::move(d));
}

FreeModule FreeModule::direct_sum(const FreeModule& o) const {
  auto d = degrees_;
  d.insert(d.end(), o.degrees_.begin(), o.degrees_.end());
  return FreeModule(ring_ ? ring_ : o.ring_, std::move(d));
}

FreeModule FreeModule::subset(const std::vector<int>& indices) const {
  std::vector<int> d;
  for (int i : indices) d.push_back(degrees_[i]);
  return FreeModule(ring_, std::move(d));
}

Vec::Vec(std::vector<MTerm> terms, const Field& F) {
  std::sort(terms.begin(), terms.end(),
            [](const MTerm& a, const MTerm& b) { return term_greater(a.mono, a.comp, b.mono, b.comp); });
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono && terms_.back().comp == t.comp) {
      terms_.back().coef = F.add(terms_.back().coef, t.coef);
      if (terms_.back().coef == 0) terms_.pop_back();
    } else if (t.coef != 0) {
      terms_.push_back(t);
    }
  }
}

Vec Vec::from_polynomial(const Polynomial& p, int comp) {
  std::vector<MTerm> t;
  t.reserve(p.size());
  for (const auto& pt : p.terms()) t.push_back({pt.mono, comp, pt.coef});
  return from_sorted(std::move(t));
}

Polynomial Vec::component(int comp) const {
  std::vector<ring::PTerm> t;
  for (const auto& mt : terms_)
    if (mt.comp == comp) t.push_back({mt.mono, mt.coef});
  return Polynomial::from_sorted(std::move(t));
}

int Vec::max_comp() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.comp);
  return m;
}

Vec sub_mul(const Vec& a, const Monomial& m, Scalar c, const Vec& b, const Field& F) {
  std::vector<MTerm> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  const Scalar nc = F.neg(c);
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.push_back(ta[i++]);
      continue;
    }
    Monomial mb = tb[j].mono * m;
    int cb = tb[j].comp;
    if (i == ta.size() || term_greater(mb, cb, ta[i].mono, ta[i].comp)) {
      Scalar v = F.mul(nc, tb[j].coef);
      if (v) out.push_back({mb, cb, v});
      ++j;
    } else if (term_greater(ta[i].mono, ta[i].comp, mb, cb)) {
      out.push_back(ta[i++]);
    } else {
      Scalar v = F.add(ta[i].coef, F.mul(nc, tb[j].coef));
      if (v) out.push_back({mb, cb, v});
      ++i;
      ++j;
    }
  }
  return Vec::from_sorted(std::move(out));
}

Vec add(const Vec& a, const Vec& b, const Field& F) { return sub_mul(a, Monomial{}, F.neg(1), b, F); }
Vec sub(const Vec& a, const Vec& b, const Field& F) { return sub_mul(a, Monomial{}, 1, b, F); }

Vec scale(const Vec& a, Scalar c, const Field& F) {
  if (c == 0) return {};
  auto t = a.terms();
  for (auto& x : t) x.coef = F.mul(x.coef, c);
  return Vec::from_sorted(std::move(t));
}

Vec mul_term(const Vec& a, const Monomial& m, Scalar c, const Field& F) {
  if (c == 0) return {};
  std::vector<MTerm> t;
  t.reserve(a.size());
  for (const auto& x : a.terms()) t.push_back({x.mono * m, x.comp, F.mul(x.coef, c)});
  return Vec::from_sorted(std::move(t));
}

Vec mul_poly(const Vec& a, const Polynomial& p, const Field& F) {
  Vec acc;
  for (const auto& t : p.terms()) acc = sub_mul(acc, t.mono, F.neg(t.coef), a, F);
  return acc;
}

Vec shift_components(const Vec& a, int offset) {
  auto t = a.terms();
  for (auto& x : t) x.comp += offset;
  return Vec::from_sorted(std::move(t));
}

Vec restrict_components(const Vec& a, int lo, int hi) {
  std::vector<MTerm> t;
  for (const auto& x : a.terms())
    if (x.comp >= lo && x.comp < hi) t.push_back({x.mono, x.comp - lo, x.coef});
  return Vec::from_sorted(std::move(t));
}

Vec normalize(const Vec& a, const ring::RingContext& R) {
  if (!R.is_quotient() || a.is_zero()) return a;
  int mc = a.max_comp();
  Vec out;
  for (int c = 0; c <= mc; ++c) {
    Polynomial p = a.component(c);
    if (p.is_zero()) continue;
    out = add(out, Vec::from_polynomial(R.normalize(p), c), R.field());
  }
  return out;
}

std::optional<int> vec_degree(const Vec& v, const FreeModule& F) {
  if (v.is_zero()) return std::nullopt;
  int d = v.leading().mono.degree() + F.degree(v.leading().comp);
  for (const auto& t : v.terms())
    if (t.mono.degree() + F.degree(t.comp) != d) return std::nullopt;
  return d;
}

}  // namespace bil::modgb
