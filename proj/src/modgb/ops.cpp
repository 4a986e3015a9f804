#include "bil/modgb/ops.hpp"

#include <algorithm>
#include <map>

#include "bil/error.hpp"
#include "bil/kernels/minors.hpp"

namespace bil::modgb {

GradedMatrix groebner_basis(const Submodule& M) {
  const auto& els = M.gb().elements();
  std::vector<int> deg;
  for (const auto& e : els) deg.push_back(*vec_degree(e, M.ambient()));
  return GradedMatrix(M.ambient(), FreeModule(M.ring(), deg), els);
}

Vec normal_form(const Vec& v, const Submodule& M) {
  if (!v.is_zero() && !vec_degree(v, M.ambient()))
    throw Error(Errc::DegreeMismatch, "normal_form: element is not homogeneous");
  return M.normal_form(v);
}

std::vector<int> minimal_generator_indices(const FreeModule& F, const std::vector<Vec>& gens) {
  int top = std::numeric_limits<int>::min();
  for (const auto& g : gens)
    if (!g.is_zero()) top = std::max(top, *vec_degree(g, F));
  GBOptions opt;
  opt.reduce = false;
  opt.max_degree = top;
  return run_groebner(F, engine_inputs(F, gens), opt).minimal;
}

GradedMatrix minimal_columns(const GradedMatrix& m) {
  GradedMatrix n = m.normalized();
  auto idx = minimal_generator_indices(n.target(), n.columns());
  return n.select_columns(idx);
}

Submodule minimalize(const Submodule& M) { return Submodule::from_columns(minimal_columns(M.matrix())); }

namespace {

// Syzygies of the given columns restricted to the first `keep` input slots.
GradedMatrix block_kernel(const FreeModule& target, const std::vector<Vec>& cols, const FreeModule& source,
                          int keep, bool minimal) {
  const RingPtr& R = target.ring();
  std::vector<Vec> ncols;
  for (const auto& c : cols) ncols.push_back(normalize(c, *R));
  GBOptions opt;
  opt.track = true;
  opt.reduce = false;
  GBResult res = run_groebner(target, engine_inputs(target, ncols), opt);
  std::vector<Vec> out;
  std::vector<int> deg;
  for (const auto& s : res.syzygies) {
    Vec v = normalize(restrict_components(s, 0, keep), *R);
    if (v.is_zero()) continue;
    auto d = vec_degree(v, source);
    if (!d) throw Error(Errc::NonHomogeneous, "syzygy is not homogeneous");
    deg.push_back(*d);
    out.push_back(std::move(v));
  }
  GradedMatrix k(source, FreeModule(R, deg), std::move(out));
  return minimal ? minimal_columns(k) : k;
}

}  // namespace

GradedMatrix syzygy_module(const GradedMatrix& m, bool minimal) {
  return block_kernel(m.target(), m.columns(), m.source(), m.cols(), minimal);
}

GradedMatrix kernel_modulo(const GradedMatrix& A, const GradedMatrix& R, bool minimal) {
  auto cols = A.columns();
  cols.insert(cols.end(), R.columns().begin(), R.columns().end());
  return block_kernel(A.target(), cols, A.source(), A.cols(), minimal);
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  GradedMatrix A = a.matrix();
  GradedMatrix X = kernel_modulo(A, b.matrix());
  GradedMatrix I = compose(A, X).normalized();
  return minimalize(Submodule::from_columns(I));
}

Submodule colon(const Submodule& M, const Ideal& I) {
  const FreeModule& F = M.ambient();
  const RingPtr& R = F.ring();
  const Field& fld = R->field();
  auto fs = I.polys();
  if (fs.empty()) return Submodule::everything(F);
  const int r = F.rank();
  FreeModule T(R, {});
  for (const auto& f : fs) T = T.direct_sum(F.shifted(*f.degree()));
  std::vector<Vec> acols(r);
  for (int i = 0; i < r; ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      acols[i] = add(acols[i], Vec::from_polynomial(fs[j], static_cast<int>(j) * r + i), fld);
  GradedMatrix A(T, F, std::move(acols));
  std::vector<Vec> rc;
  std::vector<int> rd;
  for (std::size_t j = 0; j < fs.size(); ++j)
    for (const auto& g : M.generators()) {
      rc.push_back(shift_components(g, static_cast<int>(j) * r));
      rd.push_back(*vec_degree(rc.back(), T));
    }
  GradedMatrix Rm(T, FreeModule(R, rd), std::move(rc));
  GradedMatrix K = kernel_modulo(A, Rm);
  return Submodule::from_columns(K);
}

Ideal colon_ideal(const Submodule& M, const Submodule& N) {
  const FreeModule& F = M.ambient();
  const RingPtr& R = F.ring();
  const Field& fld = R->field();
  const auto& ns = N.generators();
  if (ns.empty()) return Ideal::unit_ideal(R);
  const int r = F.rank();
  FreeModule T(R, {});
  Vec col;
  for (std::size_t j = 0; j < ns.size(); ++j) {
    int d = *vec_degree(ns[j], F);
    T = T.direct_sum(F.shifted(d));
    col = add(col, shift_components(ns[j], static_cast<int>(j) * r), fld);
  }
  GradedMatrix A(T, FreeModule(R, {0}), {col});
  std::vector<Vec> rc;
  std::vector<int> rd;
  for (std::size_t j = 0; j < ns.size(); ++j)
    for (const auto& g : M.generators()) {
      rc.push_back(shift_components(g, static_cast<int>(j) * r));
      rd.push_back(*vec_degree(rc.back(), T));
    }
  GradedMatrix Rm(T, FreeModule(R, rd), std::move(rc));
  return Submodule::from_columns(kernel_modulo(A, Rm));
}

Ideal annihilator(const ModulePresentation& M) {
  return colon_ideal(M.relation_module(), Submodule::everything(M.cover()));
}

Ideal irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (int i = 0; i < ring->num_vars(); ++i) v.push_back(ring->var(i));
  return Ideal::ideal(ring, v);
}

Polynomial substitute_linear(const Polynomial& f, const std::vector<Polynomial>& images, const Field& F) {
  const int nv = static_cast<int>(images.size());
  std::vector<std::vector<Polynomial>> pw(nv);
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& p = pw[v];
    if (p.empty()) p.push_back(Polynomial::constant(1));
    while (static_cast<int>(p.size()) <= e) p.push_back(mul(p.back(), images[v], F));
    return p[e];
  };
  Polynomial acc;
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(t.coef);
    for (int v = 0; v < nv; ++v) {
      int e = t.mono.exponent(v);
      if (e) term = mul(term, power(v, e), F);
    }
    acc = add(acc, term, F);
  }
  return acc;
}

namespace {

bool same_hilbert_polynomial(const HilbertSeries& a, const HilbertSeries& b) {
  if (a.dimension() != b.dimension()) return false;
  for (int n = 0; n <= a.dimension() + 1; ++n)
    if (a.polynomial_value(n) != b.polynomial_value(n)) return false;
  return true;
}

Submodule saturate_by_colon(const Submodule& M) {
  Ideal m = irrelevant_ideal(M.ring());
  Submodule cur = M;
  for (int it = 0; it < 64; ++it) {
    Submodule next = colon(cur, m);
    if (cur.contains(next)) return minimalize(cur);
    cur = next;
  }
  throw Error(Errc::CapExceeded, "saturation did not stabilize");
}

std::optional<Ideal> saturate_by_linear_form(const Ideal& I, std::uint64_t seed) {
  const RingPtr& R = I.ring();
  const RingPtr S = R->ambient();
  const Field& F = R->field();
  const int nv = R->num_vars();
  const int last = nv - 1;
  std::mt19937_64 rng(seed);
  std::vector<Scalar> c(nv, 0);
  for (int i = 0; i < last; ++i) c[i] = ring::random_scalar(F, rng);
  std::vector<Polynomial> fwd, back;
  for (int i = 0; i < nv; ++i) {
    fwd.push_back(S->var(i));
    back.push_back(S->var(i));
  }
  for (int i = 0; i < last; ++i) {
    fwd[last] = sub(fwd[last], scale(S->var(i), c[i], F), F);
    back[last] = add(back[last], scale(S->var(i), c[i], F), F);
  }
  std::vector<Polynomial> gens = I.polys();
  if (R->is_quotient()) gens.push_back(*R->relation());
  std::vector<Polynomial> moved;
  for (const auto& g : gens) moved.push_back(substitute_linear(g, fwd, F));
  Ideal J = Ideal::ideal(S, moved);
  std::vector<Polynomial> sat;
  for (const auto& e : J.gb().elements()) {
    Polynomial p = e.component(0);
    int k = 128;
    for (const auto& t : p.terms()) k = std::min(k, t.mono.exponent(last));
    if (k > 0) {
      std::vector<ring::PTerm> terms;
      Monomial d = Monomial::variable(last, k);
      for (const auto& t : p.terms()) terms.push_back({t.mono / d, t.coef});
      p = Polynomial::from_sorted(std::move(terms));
    }
    sat.push_back(substitute_linear(p, back, F));
  }
  Ideal satS = Ideal::ideal(S, sat);
  Ideal IS = Ideal::ideal(S, gens);
  if (!satS.contains(IS)) return std::nullopt;
  if (!same_hilbert_polynomial(hilbert_series(IS), hilbert_series(satS))) return std::nullopt;
  std::vector<Polynomial> out;
  for (const auto& p : sat) {
    Polynomial q = R->normalize(p);
    if (!q.is_zero()) out.push_back(q);
  }
  return minimalize(Ideal::ideal(R, out));
}

}  // namespace

Submodule saturate(const Submodule& M) {
  if (M.ambient().rank() == 1 && M.ambient().degree(0) == 0) {
    if (M.is_everything()) return Ideal::unit_ideal(M.ring());
    for (std::uint64_t attempt = 0; attempt < 4; ++attempt)
      if (auto r = saturate_by_linear_form(M, 0x5a7u + attempt)) return *r;
  }
  return saturate_by_colon(M);
}

bool is_saturated(const Submodule& M) { return M.contains(colon(M, irrelevant_ideal(M.ring()))); }

Pruned prune(const ModulePresentation& M) {
  const FreeModule& cover = M.cover();
  const RingPtr& R = M.ring();
  const Field& F = R->field();
  const int n = cover.rank();
  std::vector<Vec> cols;
  for (const auto& c : M.relations().columns()) {
    Vec v = normalize(c, *R);
    if (!v.is_zero()) cols.push_back(std::move(v));
  }
  std::vector<bool> alive(n, true);
  std::vector<std::pair<int, Vec>> subst;
  while (true) {
    int jc = -1, gi = -1;
    Scalar coef = 0;
    for (int j = 0; j < static_cast<int>(cols.size()) && jc < 0; ++j)
      for (const auto& t : cols[j].terms())
        if (t.mono.is_one()) {
          jc = j;
          gi = t.comp;
          coef = t.coef;
          break;
        }
    if (jc < 0) break;
    Vec col = cols[jc];
    Scalar ci = F.inv(coef);
    // e_i = -(1/c) (col - c e_i)
    Vec rest = sub(col, Vec::unit(gi, coef), F);
    subst.push_back({gi, scale(rest, F.neg(ci), F)});
    alive[gi] = false;
    std::vector<Vec> next;
    for (int k = 0; k < static_cast<int>(cols.size()); ++k) {
      if (k == jc) continue;
      Polynomial p = cols[k].component(gi);
      Vec v = cols[k];
      if (!p.is_zero()) v = normalize(sub(v, mul_poly(col, scale(p, ci, F), F), F), *R);
      if (!v.is_zero()) next.push_back(std::move(v));
    }
    cols = std::move(next);
  }
  std::vector<int> kept, newidx(n, -1);
  std::vector<int> deg;
  for (int i = 0; i < n; ++i)
    if (alive[i]) {
      newidx[i] = static_cast<int>(kept.size());
      kept.push_back(i);
      deg.push_back(cover.degree(i));
    }
  FreeModule nc(R, deg);
  auto renumber = [&](const Vec& v) {
    std::vector<MTerm> t;
    for (const auto& x : v.terms()) t.push_back({x.mono, newidx[x.comp], x.coef});
    return Vec(std::move(t), F);
  };
  std::vector<Vec> ncols;
  std::vector<int> sdeg;
  for (const auto& c : cols) {
    Vec v = renumber(c);
    sdeg.push_back(*vec_degree(v, nc));
    ncols.push_back(std::move(v));
  }
  GradedMatrix rel = minimal_columns(GradedMatrix(nc, FreeModule(R, sdeg), std::move(ncols)));
  std::vector<Vec> old_to_new(n);
  for (int i : kept) old_to_new[i] = Vec::unit(newidx[i]);
  for (auto it = subst.rbegin(); it != subst.rend(); ++it) {
    Vec acc;
    for (const auto& t : it->second.terms()) acc = sub_mul(acc, t.mono, F.neg(t.coef), old_to_new[t.comp], F);
    old_to_new[it->first] = normalize(acc, *R);
  }
  return {ModulePresentation(rel), kept, old_to_new};
}

Subquotient subquotient(const GradedMatrix& K, const GradedMatrix& R0) {
  GradedMatrix rel = kernel_modulo(K, R0);
  Pruned p = prune(ModulePresentation(rel));
  std::vector<Vec> el;
  for (int k : p.kept) el.push_back(normalize(K.column(k), *K.ring()));
  return {p.pres, el};
}

Ideal fitting_ideal(const ModulePresentation& M, int r) {
  const RingPtr& R = M.ring();
  if (r < 0) throw Error(Errc::InvalidArgument, "fitting_ideal: negative index");
  Pruned p = prune(M);
  const int n = p.pres.cover().rank();
  const int k = n - r;
  if (k <= 0) return Ideal::unit_ideal(R);
  const GradedMatrix& rel = p.pres.relations();
  if (rel.cols() < k) return Ideal::ideal(R, {});
  if (rel.cols() > 63) throw Error(Errc::CapExceeded, "fitting_ideal: relation matrix too wide");
  auto ms = kernels::minors(rel.entries(), k, R->field());
  std::vector<Polynomial> gens;
  for (auto& m : ms) {
    Polynomial q = R->normalize(m);
    if (!q.is_zero()) gens.push_back(std::move(q));
  }
  return Ideal::ideal(R, gens);
}

Polynomial derivative(const Polynomial& f, int var, const Field& F) {
  std::vector<ring::PTerm> t;
  for (const auto& x : f.terms()) {
    int e = x.mono.exponent(var);
    if (e == 0) continue;
    Scalar c = F.mul(x.coef, F.from_int(e));
    if (c) t.push_back({x.mono / Monomial::variable(var), c});
  }
  return Polynomial(std::move(t), F);
}

RingPtr make_hypersurface(std::uint32_t p, int num_vars, const Polynomial& q) {
  RingPtr R = ring::RingContext::hypersurface(p, num_vars, q);
  RingPtr S = R->ambient();
  std::vector<Polynomial> j{*R->relation()};
  for (int i = 0; i < num_vars; ++i) {
    Polynomial d = derivative(*R->relation(), i, R->field());
    if (!d.is_zero()) j.push_back(d);
  }
  if (ideal_height(Ideal::ideal(S, j)) < 3)
    throw Error(Errc::InvalidArgument, "hypersurface is singular in codimension one; irreducibility not certified");
  return R;
}

std::vector<Vec> free_basis_in_degree(const FreeModule& F, int d) {
  std::vector<MTerm> t;
  for (int i = 0; i < F.rank(); ++i) {
    int k = d - F.degree(i);
    if (k < 0) continue;
    for (const auto& m : F.ring()->monomials_of_degree(k)) t.push_back({m, i, 1});
  }
  std::sort(t.begin(), t.end(), [](const MTerm& a, const MTerm& b) { return term_greater(a.mono, a.comp, b.mono, b.comp); });
  std::vector<Vec> out;
  for (const auto& x : t) out.push_back(Vec::from_sorted({x}));
  return out;
}

std::vector<Vec> standard_basis_in_degree(const Submodule& M, int d) {
  const Reducer& red = M.gb().reducer;
  std::vector<Vec> out;
  for (auto& v : free_basis_in_degree(M.ambient(), d))
    if (red.find(v.leading().mono, v.leading().comp) < 0) out.push_back(std::move(v));
  return out;
}

}  // namespace bil::modgb
