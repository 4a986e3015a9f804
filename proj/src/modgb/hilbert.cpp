#include "bil/modgb/hilbert.hpp"

#include <algorithm>

#include "bil/error.hpp"

namespace bil::modgb {

bool TPoly::is_zero() const {
  for (auto x : c)
    if (x) return false;
  return true;
}

std::int64_t TPoly::at_one() const {
  std::int64_t s = 0;
  for (auto x : c) s += x;
  return s;
}

void TPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::size_t z = 0;
  while (z < c.size() && c[z] == 0) ++z;
  if (z == c.size()) {
    c.clear();
    low = 0;
    return;
  }
  c.erase(c.begin(), c.begin() + static_cast<long>(z));
  low += static_cast<int>(z);
}

namespace {

using Poly = std::vector<std::int64_t>;

void add_shifted(Poly& a, const Poly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void minimalize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  g = std::move(out);
}

int support_size(const Monomial& m, int nv) {
  int s = 0;
  for (int v = 0; v < nv; ++v) s += m.exponent(v) > 0;
  return s;
}

Poly numerator(std::vector<Monomial> g, int nv) {
  minimalize(g);
  if (g.empty()) return {1};
  if (g.front().is_one()) return {0};
  bool coprime = true;
  for (std::size_t i = 0; i < g.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < g.size() && coprime; ++j)
      if (!g[i].coprime(g[j])) coprime = false;
  if (coprime) {
    Poly r{1};
    for (const auto& m : g) {
      Poly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] -= 1;
      r = mul(r, f);
    }
    return r;
  }
  // pivot on the variable occurring in most non-pure generators
  std::vector<int> count(nv, 0);
  for (const auto& m : g)
    if (support_size(m, nv) > 1)
      for (int v = 0; v < nv; ++v) count[v] += m.exponent(v) > 0;
  int x = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  for (const auto& m : g)
    if (support_size(m, nv) > 1 && m.exponent(x) > 0) exps.push_back(m.exponent(x));
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  // a pure power of x at most e would divide one of these generators
  for (const auto& m : g)
    if (support_size(m, nv) == 1 && m.exponent(x) > 0 && m.exponent(x) <= e) e = exps.front();
  Monomial p = Monomial::variable(x, e);
  std::vector<Monomial> plus = g;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& m : g) colon.push_back(m / m.gcd(p));
  Poly r = numerator(std::move(plus), nv);
  add_shifted(r, numerator(std::move(colon), nv), e);
  return r;
}

std::int64_t binom(std::int64_t n, int k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// binomial coefficient as a polynomial in n, valid for any integer n
std::int64_t binom_poly(std::int64_t n, int k) {
  if (k == 0) return 1;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TPoly monomial_numerator(std::vector<Monomial> gens, int num_vars) {
  TPoly t;
  t.c = numerator(std::move(gens), num_vars);
  t.trim();
  return t;
}

HilbertSeries::HilbertSeries(TPoly numerator, int num_vars) : num_(std::move(numerator)), nv_(num_vars) {
  num_.trim();
  if (num_.is_zero()) {
    dim_ = -1;
    red_ = num_;
    return;
  }
  Poly q = num_.c;
  int s = 0;
  while (s < nv_) {
    std::int64_t at1 = 0;
    for (auto x : q) at1 += x;
    if (at1 != 0) break;
    // synthetic division by (1 - t)
    Poly d(q.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      d[i] = acc;
    }
    q = std::move(d);
    ++s;
  }
  dim_ = nv_ - s;
  red_.low = num_.low;
  red_.c = std::move(q);
}

std::int64_t HilbertSeries::multiplicity() const { return red_.at_one(); }

std::int64_t HilbertSeries::value(int n) const {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < num_.c.size(); ++k) {
    std::int64_t j = static_cast<std::int64_t>(n) - num_.low - static_cast<std::int64_t>(k);
    if (j < 0) continue;
    s += num_.c[k] * binom(j + nv_ - 1, nv_ - 1);
  }
  return s;
}

std::int64_t HilbertSeries::polynomial_value(int n) const {
  if (dim_ <= 0) return 0;
  std::int64_t s = 0;
  for (std::size_t k = 0; k < red_.c.size(); ++k) {
    std::int64_t j = static_cast<std::int64_t>(n) - red_.low - static_cast<std::int64_t>(k);
    s += red_.c[k] * binom_poly(j + dim_ - 1, dim_ - 1);
  }
  return s;
}

HilbertSeries hilbert_series(const Submodule& M) {
  const FreeModule& F = M.ambient();
  const int nv = F.ring()->num_vars();
  auto lead = M.gb().reducer.leading_monomials(F.rank());
  TPoly total;
  bool first = true;
  for (int i = 0; i < F.rank(); ++i) {
    TPoly n = monomial_numerator(lead[i], nv);
    if (n.is_zero()) continue;
    n.low += F.degree(i);
    if (first) {
      total = n;
      first = false;
      continue;
    }
    int lo = std::min(total.low, n.low);
    int hi = std::max(total.low + static_cast<int>(total.c.size()), n.low + static_cast<int>(n.c.size()));
    std::vector<std::int64_t> c(hi - lo, 0);
    for (std::size_t k = 0; k < total.c.size(); ++k) c[total.low - lo + k] += total.c[k];
    for (std::size_t k = 0; k < n.c.size(); ++k) c[n.low - lo + k] += n.c[k];
    total.low = lo;
    total.c = std::move(c);
  }
  return HilbertSeries(total, nv);
}

HilbertSeries hilbert_series(const ModulePresentation& M) { return hilbert_series(M.relation_module()); }

int height(const ModulePresentation& M) {
  auto h = hilbert_series(M);
  const int d = M.ring()->dim();
  if (h.is_zero()) return d + 1;
  return d - h.dimension();
}

int ideal_height(const Ideal& I) {
  auto h = hilbert_series(I);
  const int d = I.ring()->dim();
  if (h.is_zero()) return d + 1;
  return d - h.dimension();
}

int generic_rank(const ModulePresentation& M) {
  auto h = hilbert_series(M);
  const auto& R = *M.ring();
  if (h.is_zero() || h.dimension() < R.dim()) return 0;
  std::int64_t e = R.is_quotient() ? R.relation_degree() : 1;
  return static_cast<int>(h.multiplicity() / e);
}

CurveNumbers curve_numbers(const HilbertSeries& h) {
  if (h.dimension() != 2) {
    if (h.dimension() < 2) return {0, 1};
    throw Error(Errc::InvalidCurve, "Hilbert series does not belong to a curve");
  }
  std::int64_t deg = h.multiplicity();
  std::int64_t constant = h.polynomial_value(0);
  return {deg, 1 - constant};
}

}  // namespace bil::modgb
