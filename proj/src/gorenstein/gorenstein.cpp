#include "bil/gorenstein/gorenstein.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "bil/error.hpp"

namespace bil::gorenstein {

using homalg::FreeResolution;
using modgb::Submodule;

namespace {

using Rng = std::mt19937_64;

ModulePresentation zero_module(const RingPtr& R) { return ModulePresentation::free(FreeModule(R, {})); }

FreeModule free_at(const FreeResolution& res, int i) {
  return i <= res.length() ? res.free(i) : FreeModule(res.ring, {});
}

/// Image of d_{k} as a module: coker d_{k+1}, or the free module when the resolution stops.
ModulePresentation syzygy_at(const FreeResolution& res, int k) {
  if (res.length() > k) return ModulePresentation(res.d[k]);
  if (res.length() == k) return ModulePresentation::free(res.free(k));
  return zero_module(res.ring);
}

bool same_series(const ModulePresentation& A, const ModulePresentation& B) {
  auto a = modgb::hilbert_series(A), b = modgb::hilbert_series(B);
  auto ra = a.reduced(), rb = b.reduced();
  ra.trim();
  rb.trim();
  return a.dimension() == b.dimension() && ra.low == rb.low && ra.c == rb.c;
}

Vec random_combination(const std::vector<Vec>& basis, const ring::Field& F, Rng& rng) {
  Vec v;
  for (const auto& b : basis) v = modgb::add(v, modgb::scale(b, ring::random_scalar(F, rng), F), F);
  return v;
}

}  // namespace

void require_supported(const RingPtr& R) {
  bool p3 = !R->is_quotient() && R->num_vars() == 4;
  bool hyp = R->is_quotient() && R->dim() == 4;
  if (!p3 && !hyp) throw Error(Errc::UnsupportedRing, "need P^3's ring or a hypersurface ring of dimension 4");
}

FiniteLengthModule over_ring(const FiniteLengthModule& M, const RingPtr& R) {
  if (M.ring() == R) return M;
  if (M.ring() && M.ring()->num_vars() != R->num_vars())
    throw Error(Errc::UnsupportedRing, "module and ring have different variables");
  std::vector<std::map<int, homalg::DenseMatrix>> act(R->num_vars());
  for (int v = 0; v < R->num_vars(); ++v)
    for (const auto& [n, d] : M.dims()) act[v][n] = M.action(v, n);
  return FiniteLengthModule::from_linear_data(R, M.dims(), std::move(act));
}

FiniteLengthModule ext_dual(const FiniteLengthModule& M, const RingPtr& R) {
  return over_ring(homalg::graded_dual(M), R).shifted(-R->canonical_twist());
}

bool ext1_vanishes(const ModulePresentation& E) {
  if (E.num_generators() == 0) return true;
  if (E.ring()->is_quotient()) return homalg::ext_module(sheafcoh::to_ambient(E), 2).is_zero();
  return homalg::ext_module(E, 1).is_zero();
}

SecondSyzygy second_syzygy(const FiniteLengthModule& M, const RingPtr& R) {
  require_supported(R);
  auto Mr = over_ring(M, R);
  const auto& pres = Mr.presentation();
  if (!Mr.is_zero() && FiniteLengthModule::from_presentation(pres).dims() != Mr.dims())
    throw Error(Errc::InvalidArgument, "the relation does not act as zero on the module");
  auto res = homalg::partial_resolution(pres, 3);
  SecondSyzygy out;
  out.L0 = free_at(res, 0);
  out.L1 = free_at(res, 1);
  out.E = SheafModule::from_presentation(syzygy_at(res, 2));
  out.h1 = out.E.module().num_generators() == 0 ? FiniteLengthModule::zero(R) : sheafcoh::h1_star(out.E);
  out.hilbert_match = out.h1.dims() == Mr.dims();
  if (out.hilbert_match) {
    auto r = sheafcoh::iso_up_to_shift(Mr, out.h1, 0);
    if (r.kind != sheafcoh::IsoResult::Kind::inconclusive) out.h1_iso = r.kind == sheafcoh::IsoResult::Kind::isomorphic;
  }
  out.ext1_zero = ext1_vanishes(out.E.module());
  return out;
}

SheafModule second_syzygy_sheaf(const FiniteLengthModule& M, const RingPtr& R) {
  auto s = second_syzygy(M, R);
  if (!s.hilbert_match || !s.h1_iso.value_or(true))
    throw Error(Errc::GenericityFailure, "H^1 of the second syzygy does not match the module");
  if (!s.ext1_zero) throw Error(Errc::NotExtraverti, "second syzygy has Ext^1 != 0");
  return s.E;
}

SheafModule extraverti_module(const SheafModule& E) {
  require_supported(E.ring());
  auto res = homalg::partial_resolution(E.module(), 2);
  if (res.length() == 0) return E;
  auto ext = homalg::ext_module(res, 1);
  if (ext.is_zero()) return E;
  FreeModule dual = res.free(1).dual(0);
  std::vector<Vec> cs = ext.cocycles;
  std::stable_sort(cs.begin(), cs.end(), [&](const Vec& a, const Vec& b) {
    return *modgb::vec_degree(a, dual) > *modgb::vec_degree(b, dual);
  });
  GradedMatrix xi = homalg::cocycle_map(cs, res.free(1));
  auto y = homalg::yoneda_extension(ModulePresentation(res.d[0]), xi.target(), xi);
  return SheafModule::from_presentation(y.E);
}

DualModule dual_module(const ModulePresentation& P) {
  const RingPtr& R = P.ring();
  DualModule D;
  const FreeModule dual = P.cover().dual(0);
  if (P.relations().cols() == 0)
    D.K = GradedMatrix::identity(dual);
  else
    D.K = modgb::syzygy_module(P.relations().transpose(0));
  if (D.K.cols() == 0) {
    D.pres = zero_module(R);
    D.K = GradedMatrix(dual, FreeModule(R, {}));
    return D;
  }
  D.pres = ModulePresentation(modgb::syzygy_module(D.K));
  return D;
}

bool is_surjective(const GradedMatrix& f, const ModulePresentation& target) {
  if (target.num_generators() == 0) return true;
  std::vector<Vec> gens = f.columns();
  for (const auto& c : target.relations().columns()) gens.push_back(c);
  return Submodule(target.cover(), gens).is_everything();
}

std::optional<GradedMatrix> find_isomorphism(const ModulePresentation& A, const ModulePresentation& B,
                                             std::uint64_t seed, int tries) {
  const RingPtr& R = A.ring();
  if (!same_series(A, B)) return std::nullopt;
  if (A.is_zero() && B.is_zero()) return GradedMatrix(B.cover(), A.cover());
  auto hom = homalg::hom_presentation(A, B);
  const FreeModule hf = hom.hom_free();
  const auto& F = R->field();
  std::vector<Vec> basis;
  for (const auto& g : hom.sq.elements) {
    auto d = modgb::vec_degree(g, hf);
    if (!d || *d > 0) continue;
    for (const auto& m : R->monomials_of_degree(-*d)) basis.push_back(modgb::mul_term(g, m, 1, F));
  }
  if (basis.empty()) return std::nullopt;
  Rng rng(seed);
  for (int k = 0; k < tries; ++k) {
    Vec v = random_combination(basis, F, rng);
    if (v.is_zero()) continue;
    auto m = hom.as_matrix(v);
    GradedMatrix phi(B.cover(), A.cover(), m.columns());
    if (is_surjective(phi, B)) return phi;
  }
  return std::nullopt;
}

GorensteinTriple mcm_triple(const SheafModule& E, std::uint64_t seed) {
  const RingPtr& R = E.ring();
  require_supported(R);
  if (!ext1_vanishes(E.module())) throw Error(Errc::NotExtraverti, "Ext^1(E, S) does not vanish");
  GorensteinTriple t;
  t.E = E;
  auto res = homalg::partial_resolution(E.module(), 3);
  t.L0 = free_at(res, 0);
  t.L1 = free_at(res, 1);
  t.P = syzygy_at(res, 2);
  t.P_dual = dual_module(t.P);
  t.M = E.module().num_generators() == 0 ? FiniteLengthModule::zero(R) : sheafcoh::h1_star(E);
  t.M_star = ext_dual(t.M, R).presentation();
  const GradedMatrix& K = t.P_dual.K;
  GradedMatrix restr = res.length() >= 2 ? res.d[1].transpose(0) : GradedMatrix(K.target(), FreeModule(R, {}));
  // P^dual modulo the restrictions from L1^dual
  ModulePresentation Q(modgb::kernel_modulo(K, restr));
  if (Q.is_zero() && t.M.is_zero()) {
    t.alpha = GradedMatrix(t.M_star.cover(), K.source());
    return t;
  }
  auto phi = find_isomorphism(Q, t.M_star, seed);
  if (!phi) throw Error(Errc::GenericityFailure, "cokernel of the restriction map is not identified with M*");
  t.alpha = *phi;
  return t;
}

bool is_mcm(const ModulePresentation& P) {
  const RingPtr& R = P.ring();
  const int c = R->is_quotient() ? 1 : 0;
  if (P.is_zero()) return true;
  auto res = homalg::minimal_free_resolution(sheafcoh::to_ambient(P));
  for (int i = 0; i <= res.length(); ++i)
    if (i != c && !homalg::ext_module(res, i).is_zero()) return false;
  return true;
}

SheafModule realize_triple(const FiniteLengthModule& M, const ModulePresentation& P, const GradedMatrix& alpha,
                           std::uint64_t seed) {
  const RingPtr& R = P.ring();
  require_supported(R);
  if (!is_mcm(P)) throw Error(Errc::NotMCM, "P is not maximal Cohen-Macaulay");
  auto D = dual_module(P);
  auto Ms = ext_dual(M, R).presentation();
  if (!(alpha.source() == D.K.source()) || !(alpha.target() == Ms.cover()))
    throw Error(Errc::DegreeMismatch, "alpha does not go from P^dual to M*");
  if (!is_surjective(alpha, Ms)) throw Error(Errc::AlphaNotSurjective, "alpha is not surjective");
  const auto& F = R->field();
  GradedMatrix kk = Ms.num_generators() == 0 ? GradedMatrix::identity(alpha.source())
                                             : modgb::kernel_modulo(alpha, Ms.relations());
  std::vector<Vec> gens;
  std::vector<int> deg;
  for (int j = 0; j < kk.cols(); ++j) {
    Vec v = modgb::normalize(D.K.apply(kk.column(j)), *R);
    if (v.is_zero()) continue;
    gens.push_back(v);
    deg.push_back(kk.source().degree(j));
  }
  if (gens.empty()) return SheafModule::from_presentation(zero_module(R));
  GradedMatrix G = modgb::minimal_columns(GradedMatrix(D.K.target(), FreeModule(R, deg), gens));
  GradedMatrix d1 = modgb::syzygy_module(G);
  if (seed != 0 && d1.cols() > 0) {
    Rng rng(seed);
    int top = *std::max_element(d1.source().degrees().begin(), d1.source().degrees().end());
    Vec extra;
    for (int j = 0; j < d1.cols(); ++j)
      extra = modgb::add(extra, modgb::mul_poly(d1.column(j), R->random_form(top - d1.source().degree(j), rng), F), F);
    extra = modgb::normalize(extra, *R);
    if (!extra.is_zero()) d1 = concat(d1, GradedMatrix(d1.target(), FreeModule(R, {top}), {extra}));
  }
  GradedMatrix d2 = modgb::syzygy_module(d1);
  ModulePresentation Ep;
  if (d2.cols() == 0) {
    Ep = zero_module(R);
  } else {
    GradedMatrix d3 = modgb::syzygy_module(d2);
    Ep = ModulePresentation(d3);
  }
  return SheafModule::from_presentation(dual_module(Ep).pres);
}

std::vector<int> free_summand_degrees(const ModulePresentation& M) {
  auto pr = modgb::prune(M).pres;
  const RingPtr& R = M.ring();
  std::vector<int> out;
  if (pr.num_generators() == 0) return out;
  auto hom = homalg::hom_presentation(pr, ModulePresentation::free(FreeModule(R, {0})));
  const FreeModule hf = hom.hom_free();
  const FreeModule& F0 = pr.cover();
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < F0.rank(); ++i) by_degree[F0.degree(i)].push_back(i);
  for (const auto& [a, idx] : by_degree) {
    std::vector<const Vec*> rows;
    for (const auto& g : hom.sq.elements)
      if (modgb::vec_degree(g, hf) == -a) rows.push_back(&g);
    if (rows.empty()) continue;
    homalg::DenseMatrix m(rows.size(), idx.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& t : rows[r]->terms()) {
        if (t.mono.degree() != 0) continue;
        auto it = std::find(idx.begin(), idx.end(), t.comp % F0.rank());
        if (it != idx.end()) m(r, it - idx.begin()) = t.coef;
      }
    auto k = kernels::rank(m, R->field());
    for (std::size_t i = 0; i < k; ++i) out.push_back(a);
  }
  return out;
}

BettiTable stable_betti(const ModulePresentation& M, int steps) {
  auto t = homalg::betti_table(homalg::partial_resolution(M, steps));
  for (int a : free_summand_degrees(M)) {
    auto it = t.b.find({0, a});
    if (it != t.b.end() && --it->second == 0) t.b.erase(it);
  }
  return t;
}

StableComparison stably_equivalent(const ModulePresentation& A, const ModulePresentation& B, int steps,
                                   std::uint64_t seed) {
  StableComparison c;
  c.betti_equal = stable_betti(A, steps) == stable_betti(B, steps);
  if (!c.betti_equal) {
    c.kind = StableComparison::Kind::not_equivalent;
    c.reason = "stable Betti tables differ";
    return c;
  }
  auto oa = syzygy_at(homalg::partial_resolution(A, 2), 1);
  auto ob = syzygy_at(homalg::partial_resolution(B, 2), 1);
  if (oa.is_zero() && ob.is_zero()) {
    c.kind = StableComparison::Kind::equivalent;
    c.reason = "both free";
    return c;
  }
  if (find_isomorphism(oa, ob, seed)) {
    c.kind = StableComparison::Kind::equivalent;
    c.reason = "first syzygies isomorphic";
  } else {
    c.reason = "no isomorphism of first syzygies found";
  }
  return c;
}

RoundTrip round_trip(const GorensteinTriple& t, std::uint64_t seed) {
  RoundTrip r;
  auto E2 = realize_triple(t.M, t.P, t.alpha, seed);
  auto t2 = mcm_triple(E2, seed + 1);
  r.rao_iso = sheafcoh::iso_up_to_shift(t.M, t2.M, 0).kind == sheafcoh::IsoResult::Kind::isomorphic;
  r.p_stable = stably_equivalent(t.P, t2.P).kind == StableComparison::Kind::equivalent;
  r.e_betti = stable_betti(t.E.module(), 3) == stable_betti(E2.module(), 3);
  return r;
}

std::string to_string(StableComparison::Kind k) {
  switch (k) {
    case StableComparison::Kind::equivalent:
      return "equivalent";
    case StableComparison::Kind::not_equivalent:
      return "not_equivalent";
    default:
      return "inconclusive";
  }
}

}  // namespace bil::gorenstein
