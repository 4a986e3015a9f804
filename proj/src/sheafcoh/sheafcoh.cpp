#include "bil/sheafcoh/sheafcoh.hpp"

#include <mutex>
#include <random>

#include "bil/error.hpp"

namespace bil::sheafcoh {

CurveIdeal CurveIdeal::empty_curve(const RingPtr& ring) {
  CurveIdeal c;
  c.ideal = Ideal::unit_ideal(ring);
  c.empty = true;
  return c;
}

CurveIdeal CurveIdeal::from_ideal(const Ideal& I) {
  if (I.ring()->is_quotient() || I.ring()->num_vars() != 4)
    throw Error(Errc::UnsupportedRing, "curve ideals live in the coordinate ring of P^3");
  Ideal sat = modgb::saturate(I);
  CurveIdeal c;
  c.input_saturated = sat.equals(I);
  if (sat.is_unit_ideal()) {
    c = empty_curve(I.ring());
    c.input_saturated = I.is_unit_ideal();
    return c;
  }
  int h = modgb::ideal_height(sat);
  if (h != 2) throw Error(Errc::InvalidCurve, "ideal has height " + std::to_string(h) + ", not 2");
  auto u = unmixed_check(sat);
  if (!u.unmixed) throw Error(Errc::InvalidCurve, "ideal has embedded or lower dimensional components");
  c.ideal = sat;
  auto nums = modgb::curve_numbers(modgb::hilbert_series(sat));
  c.degree = static_cast<int>(nums.degree);
  c.genus = static_cast<int>(nums.genus);
  return c;
}

struct SheafModule::Cache {
  std::once_flag once;
  std::unique_ptr<FreeResolution> res;
};

SheafModule SheafModule::from_presentation(const ModulePresentation& M) {
  SheafModule E;
  const Ideal& R = M.relation_module();
  Ideal sat = modgb::saturate(R);
  ModulePresentation p = sat.equals(R) ? M : ModulePresentation(sat.matrix());
  E.pres_ = modgb::prune(p).pres;
  E.rank_ = modgb::generic_rank(E.pres_);
  E.cache_ = std::make_shared<Cache>();
  return E;
}

SheafModule SheafModule::from_presentation(const ModulePresentation& M, std::vector<Vec>& carried,
                                           std::vector<int>* kept) {
  SheafModule E;
  const Ideal& R = M.relation_module();
  Ideal sat = modgb::saturate(R);
  ModulePresentation p = sat.equals(R) ? M : ModulePresentation(sat.matrix());
  auto pr = modgb::prune(p);
  const ring::Field& F = M.ring()->field();
  for (auto& v : carried) {
    Vec w;
    for (const auto& t : v.terms()) w = modgb::add(w, modgb::mul_term(pr.old_to_new[t.comp], t.mono, t.coef, F), F);
    v = pr.pres.normal_form(w).is_zero() ? Vec() : w;
  }
  if (kept) *kept = pr.kept;
  E.pres_ = pr.pres;
  E.rank_ = modgb::generic_rank(E.pres_);
  E.cache_ = std::make_shared<Cache>();
  return E;
}

SheafModule SheafModule::of_ideal(const Ideal& I, int twist) {
  SheafModule E;
  E.pres_ = ModulePresentation::of_submodule(modgb::minimalize(I)).shifted(twist);
  E.rank_ = I.is_zero() ? 0 : 1;
  E.cache_ = std::make_shared<Cache>();
  return E;
}

const FreeResolution& SheafModule::resolution() const {
  if (ring()->is_quotient()) throw Error(Errc::UnsupportedRing, "resolution needs the polynomial ring");
  std::call_once(cache_->once, [&] {
    cache_->res = std::make_unique<FreeResolution>(homalg::minimal_free_resolution(pres_));
  });
  return *cache_->res;
}

ExtModule SheafModule::ext(int i, int twist) const { return homalg::ext_module(resolution(), i, twist); }

ModulePresentation to_ambient(const ModulePresentation& M) {
  const auto& R = *M.ring();
  if (!R.is_quotient()) return M;
  RingPtr T = R.ambient();
  const auto& q = *R.relation();
  const auto& F = R.field();
  FreeModule cover(T, M.cover().degrees());
  std::vector<Vec> cols = M.relations().columns();
  std::vector<int> deg = M.relations().source().degrees();
  for (int i = 0; i < cover.rank(); ++i) {
    cols.push_back(modgb::mul_poly(Vec::unit(i), q, F));
    deg.push_back(cover.degree(i) + R.relation_degree());
  }
  return ModulePresentation(GradedMatrix(cover, FreeModule(T, deg), std::move(cols)));
}

namespace {

FiniteLengthModule rering(const FiniteLengthModule& M, const RingPtr& R) {
  if (M.ring() == R) return M;
  std::vector<std::map<int, DenseMatrix>> act(R->num_vars());
  for (int v = 0; v < R->num_vars(); ++v)
    for (const auto& [n, d] : M.dims()) act[v][n] = M.action(v, n);
  return FiniteLengthModule::from_linear_data(R, M.dims(), std::move(act));
}

}  // namespace

FiniteLengthModule h1_star(const SheafModule& E) {
  const int N = E.ring()->num_vars();
  ExtModule e = E.ring()->is_quotient() ? homalg::ext_module(to_ambient(E.module()), N - 2, -N) : E.ext(N - 2, -N);
  if (e.is_zero()) return FiniteLengthModule::zero(E.ring());
  auto fl = FiniteLengthModule::from_presentation(e.pres);
  return rering(homalg::graded_dual(fl), E.ring());
}

ModulePresentation h2_star_dual(const SheafModule& E) {
  const int N = E.ring()->num_vars();
  if (E.ring()->is_quotient()) return homalg::ext_module(to_ambient(E.module()), N - 3, -N).pres;
  return E.ext(N - 3, -N).pres;
}

FiniteLengthModule rao_module(const CurveIdeal& C) {
  if (C.empty) return FiniteLengthModule::zero(C.ring());
  return h1_star(SheafModule::of_ideal(C.ideal));
}

namespace {

ConditionTReport report_from(const FreeResolution& res, int rank) {
  if (res.ring->is_quotient() || res.ring->num_vars() != 4)
    throw Error(Errc::UnsupportedRing, "condition T is checked over P^3's ring");
  ConditionTReport r;
  r.rank = rank;
  r.heights.assign(5, 0);
  for (int i = 1; i <= 4; ++i) r.heights[i] = modgb::height(homalg::ext_module(res, i).pres);
  const auto& h = r.heights;
  r.t1 = rank >= 0 && h[1] >= 2 && h[2] >= 2 && h[3] >= 2 && h[4] >= 2;
  r.t2 = h[2] >= 3 && h[3] >= 3 && h[4] >= 3;
  r.t3 = h[2] >= 4 && h[3] >= 4 && h[4] >= 5;
  r.t4 = true;
  r.depth_two = h[3] >= 5 && h[4] >= 5;
  r.note = "orientability is automatic over P^3";
  return r;
}

}  // namespace

ConditionTReport check_condition_T(const SheafModule& E) {
  if (E.ring()->is_quotient()) throw Error(Errc::UnsupportedRing, "condition T is checked over P^3's ring");
  return report_from(E.resolution(), E.rank());
}

ConditionTReport check_condition_T(const ModulePresentation& M) {
  if (M.ring()->is_quotient()) throw Error(Errc::UnsupportedRing, "condition T is checked over P^3's ring");
  return report_from(homalg::minimal_free_resolution(M), modgb::generic_rank(M));
}

IdealAndTwist module_to_ideal(const SheafModule& E) {
  if (E.rank() != 1) throw Error(Errc::NotRankOne, "module has rank " + std::to_string(E.rank()));
  auto rep = check_condition_T(E);
  if (!rep.ok()) throw Error(Errc::ConditionTFailed, "module does not satisfy condition T");
  auto emb = rank_one_embedding(E.module());
  IdealAndTwist out;
  out.twist = emb.twist;
  out.embedding = emb.row;
  out.curve = emb.ideal.is_unit_ideal() ? CurveIdeal::empty_curve(E.ring()) : CurveIdeal::from_ideal(emb.ideal);
  return out;
}

RankOneEmbedding rank_one_embedding(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  auto S = ModulePresentation::free(FreeModule(R, {0}));
  auto hom = homalg::hom_presentation(M, S);
  if (hom.sq.elements.size() != 1 || hom.sq.pres.relations().cols() != 0)
    throw Error(Errc::ConditionTFailed, "dual module is not free of rank one");
  const Vec& phi = hom.sq.elements[0];
  RankOneEmbedding out;
  out.twist = *modgb::vec_degree(phi, hom.hom_free());
  auto m = hom.as_matrix(phi);
  out.row = GradedMatrix(FreeModule(R, {-out.twist}), M.cover(), m.columns());
  out.ideal = modgb::saturate(Ideal::ideal(R, out.row.entries()[0]));
  return out;
}

UnmixedReport unmixed_check(const Ideal& I) {
  if (modgb::ideal_height(I) != 2) throw Error(Errc::WrongHeight, "unmixedness is checked for height two ideals");
  auto e = homalg::ext_module(ModulePresentation::quotient(I), 2);
  UnmixedReport r;
  r.hull = modgb::annihilator(e.pres);
  r.unmixed = r.hull.equals(I);
  return r;
}

IsoResult iso_up_to_shift(const FiniteLengthModule& A, const FiniteLengthModule& B, std::optional<int> shift,
                          std::uint64_t seed, int tries) {
  IsoResult res;
  if (A.is_zero() || B.is_zero()) {
    res.kind = A.is_zero() && B.is_zero() ? IsoResult::Kind::isomorphic : IsoResult::Kind::not_isomorphic;
    res.shift = shift.value_or(0);
    return res;
  }
  int h = shift.value_or(B.lo() - A.lo());
  res.shift = h;
  if (A.dims().size() != B.dims().size()) {
    res.kind = IsoResult::Kind::not_isomorphic;
    return res;
  }
  for (const auto& [n, d] : B.dims())
    if (A.dim(n - h) != d) {
      res.kind = IsoResult::Kind::not_isomorphic;
      return res;
    }
  const auto& F = A.ring()->field();
  std::map<int, std::size_t> off;
  std::size_t unknowns = 0;
  for (const auto& [n, d] : B.dims()) {
    off[n] = unknowns;
    unknowns += static_cast<std::size_t>(d) * d;
  }
  auto var = [&](int n, int r, int c) { return off[n] + static_cast<std::size_t>(r) * B.dim(n) + c; };
  std::vector<std::vector<std::pair<std::size_t, ring::Scalar>>> eqs;
  const int nv = A.ring()->num_vars();
  for (int v = 0; v < nv; ++v)
    for (const auto& [n, d] : B.dims()) {
      int d1 = B.dim(n + 1);
      if (d1 == 0) continue;
      DenseMatrix Av = A.action(v, n - h), Bv = B.action(v, n);
      // phi_{n+1} A_v - B_v phi_n = 0
      for (int r = 0; r < d1; ++r)
        for (int c = 0; c < d; ++c) {
          std::vector<std::pair<std::size_t, ring::Scalar>> e;
          for (int k = 0; k < d1; ++k)
            if (Av(k, c)) e.push_back({var(n + 1, r, k), Av(k, c)});
          for (int k = 0; k < d; ++k)
            if (Bv(r, k)) e.push_back({var(n, k, c), F.neg(Bv(r, k))});
          if (!e.empty()) eqs.push_back(std::move(e));
        }
    }
  DenseMatrix sys(eqs.size(), unknowns);
  for (std::size_t i = 0; i < eqs.size(); ++i)
    for (auto [j, c] : eqs[i]) sys(i, j) = F.add(sys(i, j), c);
  DenseMatrix N = eqs.empty() ? DenseMatrix::identity(unknowns) : kernels::nullspace(sys, F);
  res.hom_dim = static_cast<int>(N.cols());
  if (N.cols() == 0) {
    res.kind = IsoResult::Kind::not_isomorphic;
    return res;
  }
  for (const auto& [n, d] : B.dims()) {
    bool zero = true;
    for (std::size_t i = off[n]; i < off[n] + static_cast<std::size_t>(d) * d && zero; ++i)
      for (std::size_t k = 0; k < N.cols() && zero; ++k)
        if (N(i, k)) zero = false;
    if (zero) {
      res.kind = IsoResult::Kind::not_isomorphic;
      return res;
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < tries; ++t) {
    std::vector<ring::Scalar> coef(N.cols());
    for (auto& c : coef) c = ring::random_scalar(F, rng);
    std::vector<ring::Scalar> x(unknowns, 0);
    for (std::size_t i = 0; i < unknowns; ++i)
      for (std::size_t k = 0; k < N.cols(); ++k) x[i] = F.add(x[i], F.mul(N(i, k), coef[k]));
    bool ok = true;
    std::map<int, DenseMatrix> phi;
    for (const auto& [n, d] : B.dims()) {
      DenseMatrix P(d, d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) P(r, c) = x[var(n, r, c)];
      if (kernels::determinant(P, F) == 0) {
        ok = false;
        break;
      }
      phi[n] = std::move(P);
    }
    if (ok) {
      res.kind = IsoResult::Kind::isomorphic;
      res.phi = std::move(phi);
      return res;
    }
  }
  res.kind = IsoResult::Kind::inconclusive;
  return res;
}

}  // namespace bil::sheafcoh
