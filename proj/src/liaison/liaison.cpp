#include "bil/liaison/liaison.hpp"

#include <algorithm>
#include <numeric>

#include "bil/error.hpp"

namespace bil::liaison {

using homalg::FiniteLengthModule;
using modgb::MTerm;
using ring::Field;
using ring::Scalar;
using sheafcoh::IsoResult;

namespace {

using Rng = std::mt19937_64;

void require_p3(const RingPtr& R) {
  if (R->is_quotient() || R->num_vars() != 4) throw Error(Errc::UnsupportedRing, "curves are handled in P^3 only");
}

CurveIdeal curve_of(const Ideal& sat) {
  return sat.is_unit_ideal() ? CurveIdeal::empty_curve(sat.ring()) : CurveIdeal::from_ideal(sat);
}

Ideal ideal_of(const CurveIdeal& C) { return C.empty ? Ideal::unit_ideal(C.ring()) : C.ideal; }

int degree_in(const Vec& v, const FreeModule& F) {
  auto d = modgb::vec_degree(v, F);
  if (!d) throw Error(Errc::NonHomogeneous, "section is zero or not homogeneous");
  return *d;
}

FiniteLengthModule rao_of(const CurveIdeal& C) { return sheafcoh::rao_module(C); }

// to_n == from_{n-h}
bool dims_shifted(const FiniteLengthModule& from, const FiniteLengthModule& to, int h) {
  for (const auto& [n, d] : to.dims())
    if (from.dim(n - h) != d) return false;
  for (const auto& [n, d] : from.dims())
    if (to.dim(n + h) != d) return false;
  return true;
}

bool passes_T(const ModulePresentation& P, int rank) {
  auto E = SheafModule::from_presentation(P);
  if (E.rank() != rank) return false;
  return sheafcoh::check_condition_T(E).ok();
}

Polynomial eval_row(const GradedMatrix& row, const Vec& v) {
  return row.ring()->normalize(row.apply(v).component(0));
}

GradedMatrix columns_matrix(const FreeModule& target, const std::vector<Vec>& cols) {
  std::vector<int> deg;
  for (const auto& c : cols) deg.push_back(degree_in(c, target));
  return GradedMatrix(target, FreeModule(target.ring(), deg), cols);
}

bool same_module(const ModulePresentation& a, const ModulePresentation& b) {
  return a.cover() == b.cover() && a.relation_module().equals(b.relation_module());
}

std::vector<GradedMatrix> dual_rows(const ModulePresentation& P) {
  auto S = ModulePresentation::free(FreeModule(P.ring(), {0}));
  auto hom = homalg::hom_presentation(P, S);
  std::vector<GradedMatrix> rows;
  for (const auto& e : hom.sq.elements) rows.push_back(hom.as_matrix(e));
  return rows;
}

Feasibility feasibility_impl(const ModulePresentation& P, int r, int d, Rng& rng) {
  if (r < 2) throw Error(Errc::RankTooSmall, "feasibility needs rank at least two");
  const RingPtr& R = P.ring();
  Feasibility f;
  auto basis = modgb::standard_basis_in_degree(P.relation_module(), d);
  f.dim_W = static_cast<int>(basis.size());
  if (basis.empty()) {
    f.note = "no sections in degree " + std::to_string(d);
    return f;
  }
  const Field& F = R->field();
  std::vector<Vec> U;
  if (f.dim_W <= r + 3) {
    U = basis;
  } else {
    for (int k = 0; k < r + 3; ++k) {
      Vec u;
      for (const auto& b : basis) u = modgb::add(u, modgb::scale(b, ring::random_scalar(F, rng), F), F);
      U.push_back(u);
    }
  }
  std::vector<Polynomial> vals;
  for (const auto& row : dual_rows(P))
    for (const auto& u : U) {
      Polynomial p = eval_row(row, u);
      if (!p.is_zero()) vals.push_back(p);
    }
  Ideal J = Ideal::ideal(R, vals);
  f.vanishing_height = J.is_unit_ideal() ? 4 : (vals.empty() ? 0 : modgb::ideal_height(J));
  f.a_holds = f.vanishing_height >= 2;
  auto Q = quotient_by(P, U);
  int rq = modgb::generic_rank(Q);
  f.rank_E0 = r - rq;
  if (f.rank_E0 >= 2) {
    f.b_holds = true;
  } else if (f.rank_E0 == 1) {
    auto Umat = columns_matrix(P.cover(), U);
    auto E0 = SheafModule::from_presentation(ModulePresentation(modgb::kernel_modulo(Umat, P.relations())));
    bool free_one = E0.module().num_generators() == 1 && E0.module().relations().cols() == 0;
    auto q = SheafModule::from_presentation(Q);
    f.b_holds = free_one && q.rank() == r - 1 && sheafcoh::check_condition_T(q).t1;
    if (!f.b_holds) f.note = "rank one subsheaf is not a free summand with a good quotient";
  } else {
    f.note = "sections generate a torsion subsheaf";
  }
  f.feasible = f.a_holds && f.b_holds;
  if (!f.a_holds && f.note.empty()) f.note = "sections vanish along a surface";
  return f;
}

SectionQuotient section_quotient_impl(const ModulePresentation& P, int r, int d, Rng& rng, int retries) {
  SectionQuotient out;
  out.degree = d;
  for (int k = 0; k < retries; ++k) {
    out.attempts = k + 1;
    Vec s = P.normal_form(random_element(P.cover(), d, rng));
    if (s.is_zero()) continue;
    auto Q = quotient_by(P, {s});
    auto q = SheafModule::from_presentation(Q);
    if (q.rank() != r - 1 || !sheafcoh::check_condition_T(q).ok()) continue;
    out.section = s;
    out.raw = Q;
    out.quotient = q;
    return out;
  }
  Rng again(rng());
  auto f = feasibility_impl(P, r, d, again);
  throw Error(Errc::GenericityFailure, "no section of degree " + std::to_string(d) + " gave a quotient satisfying T after " +
                                           std::to_string(retries) + " draws; feasibility " +
                                           (f.feasible ? "holds" : "fails: " + f.note));
}

}  // namespace

ModulePresentation quotient_by(const ModulePresentation& P, const std::vector<Vec>& sections) {
  std::vector<Vec> cols;
  for (const auto& s : sections)
    if (!s.is_zero()) cols.push_back(s);
  if (cols.empty()) return P;
  return ModulePresentation(concat(P.relations(), columns_matrix(P.cover(), cols)));
}

Vec random_element(const FreeModule& F, int d, Rng& rng) {
  const Field& fld = F.ring()->field();
  Vec v;
  for (int i = 0; i < F.rank(); ++i) {
    if (d < F.degree(i)) continue;
    v = modgb::add(v, Vec::from_polynomial(F.ring()->random_form(d - F.degree(i), rng), i), fld);
  }
  return v;
}

Extraverti extraverti_extension(const SheafModule& E, const std::vector<Vec>& lifts) {
  require_p3(E.ring());
  const RingPtr& R = E.ring();
  const auto& res = E.resolution();
  const FreeModule& cover = E.module().cover();
  if (!(res.free(0) == cover)) throw Error(Errc::NotMinimal, "resolution cover differs from the module cover");
  Extraverti out;
  auto ext = homalg::ext_module(res, 1);
  if (ext.is_zero()) {
    out.F = E;
    out.sections = GradedMatrix(cover, FreeModule(R, {}));
    out.to_input = GradedMatrix::identity(cover);
    out.lifted = lifts;
    return out;
  }
  FreeModule dual = res.free(1).dual(0);
  std::vector<Vec> cs = ext.cocycles;
  std::stable_sort(cs.begin(), cs.end(),
                   [&](const Vec& a, const Vec& b) { return degree_in(a, dual) > degree_in(b, dual); });
  GradedMatrix xi = homalg::cocycle_map(cs, res.free(1));
  const FreeModule& L = xi.target();
  auto y = homalg::yoneda_extension(ModulePresentation(res.d[0]), L, xi);
  const int r = L.rank();
  std::vector<Vec> carried;
  for (int i = 0; i < r; ++i) carried.push_back(Vec::unit(i));
  for (const auto& v : lifts) carried.push_back(modgb::shift_components(v, r));
  std::vector<int> kept;
  out.F = SheafModule::from_presentation(y.E, carried, &kept);
  const FreeModule& fc = out.F.module().cover();
  out.L_twists = L.degrees();
  out.sections = GradedMatrix(fc, L, std::vector<Vec>(carried.begin(), carried.begin() + r));
  std::vector<Vec> ti;
  for (int k : kept) ti.push_back(y.to_A.column(k));
  out.to_input = GradedMatrix(cover, fc, ti);
  out.lifted.assign(carried.begin() + r, carried.end());
  return out;
}

SheafModule build_extraverti(const SheafModule& E) {
  if (!sheafcoh::check_condition_T(E).ok()) throw Error(Errc::ConditionTFailed, "build_extraverti needs condition T");
  return extraverti_extension(E).F;
}

ExtravertiCheck verify_extraverti(const SheafModule& input, const SheafModule& F) {
  ExtravertiCheck c;
  c.ext1_zero = F.ext(1).is_zero();
  c.condition_t = sheafcoh::check_condition_T(F).ok();
  auto r = sheafcoh::iso_up_to_shift(sheafcoh::h1_star(input), sheafcoh::h1_star(F), 0);
  c.h1_preserved = r.kind == IsoResult::Kind::isomorphic;
  return c;
}

NTypeResolution n_type_resolution(const CurveIdeal& C, int twist) {
  if (C.empty) throw Error(Errc::InvalidArgument, "the empty scheme has no N-type resolution");
  require_p3(C.ring());
  const RingPtr& R = C.ring();
  auto E = SheafModule::of_ideal(C.ideal, twist);
  auto mins = modgb::minimalize(C.ideal);
  std::vector<Vec> cols = mins.generators();
  GradedMatrix row(FreeModule(R, {-twist}), E.module().cover(), cols);
  auto x = extraverti_extension(E);
  NTypeResolution out;
  out.curve = C;
  out.twist = twist;
  out.L_twists = x.L_twists;
  out.N = x.F;
  out.sections = x.sections;
  out.surjection = compose(row, x.to_input);
  return out;
}

bool verify_exact(const NTypeResolution& R) {
  const auto& P = R.N.module();
  for (const auto& c : R.sections.columns())
    if (!eval_row(R.surjection, c).is_zero()) return false;
  if (R.r() > 0 && !modgb::kernel_modulo(R.sections, P.relations()).is_zero()) return false;
  GradedMatrix K = modgb::syzygy_module(R.surjection);
  std::vector<Vec> gens = R.sections.columns();
  for (const auto& c : P.relations().columns()) gens.push_back(c);
  modgb::Submodule img(P.cover(), gens);
  for (const auto& c : K.columns())
    if (!img.contains(c)) return false;
  Ideal im = Ideal::ideal(R.N.ring(), R.surjection.entries()[0]);
  return im.equals(R.curve.ideal);
}

Feasibility section_quotient_feasible(const SheafModule& E, int d, std::uint64_t seed) {
  return section_quotient_feasible(E.module(), E.rank(), d, seed);
}

Feasibility section_quotient_feasible(const ModulePresentation& E, int rank, int d, std::uint64_t seed) {
  require_p3(E.ring());
  Rng rng(seed);
  return feasibility_impl(E, rank, d, rng);
}

SectionQuotient general_section_quotient(const SheafModule& E, int d, std::uint64_t seed, int retries) {
  return general_section_quotient(E.module(), E.rank(), d, seed, retries);
}

SectionQuotient general_section_quotient(const ModulePresentation& E, int rank, int d, std::uint64_t seed,
                                         int retries) {
  require_p3(E.ring());
  if (rank < 1) throw Error(Errc::RankTooSmall, "no section quotient of a torsion module");
  Rng rng(seed);
  return section_quotient_impl(E, rank, d, rng, retries);
}

bool linear_equivalence_holds(const Ideal& I1, const Ideal& I2, const Polynomial& F, const Polynomial& A,
                              const Polynomial& B) {
  const RingPtr& R = I1.ring();
  const Field& fld = R->field();
  if (F.is_zero() || A.is_zero() || B.is_zero()) return false;
  if (!I1.contains(F) || !I2.contains(F)) return false;
  Ideal f = Ideal::ideal(R, {F});
  if (!modgb::colon(f, Ideal::ideal(R, {A})).equals(f)) return false;
  if (!modgb::colon(f, Ideal::ideal(R, {B})).equals(f)) return false;
  std::vector<Polynomial> l{F}, r{F};
  for (const auto& g : I1.polys()) l.push_back(ring::mul(A, g, fld));
  for (const auto& g : I2.polys()) r.push_back(ring::mul(B, g, fld));
  return modgb::saturate(Ideal::ideal(R, l)).equals(modgb::saturate(Ideal::ideal(R, r)));
}

BiliaisonStep elementary_biliaison_rank2(const SheafModule& E, const Vec& s, const Vec& t, std::uint64_t seed,
                                         bool check_iso) {
  return elementary_biliaison_rank2(E.module(), s, t, seed, check_iso);
}

BiliaisonStep elementary_biliaison_rank2(const ModulePresentation& E, const Vec& s, const Vec& t,
                                         std::uint64_t seed, bool check_iso) {
  const RingPtr& R = E.ring();
  require_p3(R);
  if (modgb::generic_rank(E) != 2) throw Error(Errc::NotRankTwo, "certificate module must have rank two");
  BiliaisonStep st;
  st.origin = "rank2";
  st.s_degree = degree_in(s, E.cover());
  st.t_degree = degree_in(t, E.cover());
  auto Q1 = quotient_by(E, {s});
  auto Q2 = quotient_by(E, {t});
  if (!passes_T(Q1, 1) || !passes_T(Q2, 1)) throw Error(Errc::QuotientNotT, "a section quotient fails condition T");
  auto e1 = sheafcoh::rank_one_embedding(Q1);
  auto e2 = sheafcoh::rank_one_embedding(Q2);
  st.from = curve_of(e1.ideal);
  st.to = curve_of(e2.ideal);
  st.from_twist = e1.twist;
  st.to_twist = e2.twist;
  std::vector<Vec> carried{s, t};
  st.E = SheafModule::from_presentation(E, carried);
  st.s = carried[0];
  st.t = carried[1];
  Polynomial gamma = eval_row(e1.row, t);
  if (gamma.is_zero()) {
    st.identity = true;
    bool same = ideal_of(st.from).equals(ideal_of(st.to)) && st.from_twist == st.to_twist;
    st.degree_law = same;
    st.rao_shift = same;
    st.linear_equivalence = same;
    if (check_iso) st.rao_iso = same;
    return st;
  }
  st.surface = gamma;
  st.surface_degree = st.from_twist + st.t_degree;
  st.height = st.to_twist - st.from_twist;
  st.degree_law = gamma.degree() == st.surface_degree &&
                  st.to.degree == st.from.degree + st.height * st.surface_degree;
  auto m1 = rao_of(st.from), m2 = rao_of(st.to);
  st.rao_shift = dims_shifted(m1, m2, st.height);
  if (check_iso) {
    auto r = sheafcoh::iso_up_to_shift(m1, m2, st.height, seed);
    st.rao_iso = r.kind == IsoResult::Kind::isomorphic;
  }
  // phi1(e) I_to == phi2(e) I_from modulo the surface
  Rng rng(seed ^ 0x5eedULL);
  int c = 0;
  for (int d : E.cover().degrees()) c = std::max(c, d);
  for (int k = 0; k < 8 && !st.linear_equivalence; ++k) {
    Vec e = random_element(E.cover(), c + k / 3, rng);
    Polynomial A = eval_row(e2.row, e), B = eval_row(e1.row, e);
    st.linear_equivalence = linear_equivalence_holds(ideal_of(st.from), ideal_of(st.to), gamma, A, B);
  }
  return st;
}

BiliaisonStep step_from_linear_equivalence(const CurveIdeal& V1, const CurveIdeal& V2, const Polynomial& F,
                                           const Polynomial& A, const Polynomial& B, std::uint64_t seed,
                                           bool check_iso) {
  const RingPtr& R = V1.ring();
  require_p3(R);
  const Field& fld = R->field();
  if (F.is_zero() || A.is_zero() || B.is_zero()) throw Error(Errc::BadSurface, "zero form in a linear equivalence");
  const int h = *A.degree() - *B.degree();
  auto gens_of = [&](const CurveIdeal& C) {
    std::vector<Polynomial> g = modgb::minimalize(ideal_of(C)).polys();
    g.push_back(F);
    return g;
  };
  auto g1 = gens_of(V1), g2 = gens_of(V2);
  const int n1 = static_cast<int>(g1.size()), n2 = static_cast<int>(g2.size());
  auto P1 = ModulePresentation::of_submodule(modgb::Submodule::ideal(R, g1));
  auto P2 = ModulePresentation::of_submodule(modgb::Submodule::ideal(R, g2)).shifted(h);
  if (P1.num_generators() != n1 || P2.num_generators() != n2)
    throw Error(Errc::BadSurface, "surface equation vanishes");
  FreeModule cover = P1.cover().direct_sum(P2.cover());
  const int t0 = -*A.degree();
  std::vector<Vec> row;
  for (const auto& g : g1) row.push_back(Vec::from_polynomial(ring::mul(A, g, fld), 0));
  for (const auto& g : g2) row.push_back(Vec::from_polynomial(ring::neg(ring::mul(B, g, fld), fld), 0));
  GradedMatrix phi(FreeModule(R, {t0}), cover, row);
  GradedMatrix fm(FreeModule(R, {t0}), FreeModule(R, {t0 + *F.degree()}), {Vec::from_polynomial(F, 0)});
  GradedMatrix K = modgb::kernel_modulo(phi, fm);
  Vec s = Vec::unit(n1 + n2 - 1), t = Vec::unit(n1 - 1);
  GradedMatrix gens = concat(columns_matrix(cover, {s, t}), K);
  GradedMatrix rel = modgb::kernel_modulo(gens, direct_sum(P1.relations(), P2.relations()));
  auto st = elementary_biliaison_rank2(ModulePresentation(rel), Vec::unit(0), Vec::unit(1), seed, check_iso);
  if (!ideal_of(st.from).equals(ideal_of(V1)) || !ideal_of(st.to).equals(ideal_of(V2)))
    throw Error(Errc::BadSurface, "linear equivalence does not relate the two curves");
  st.origin = "linear-equivalence";
  st.linear_equivalence = st.linear_equivalence && linear_equivalence_holds(ideal_of(V1), ideal_of(V2), F, A, B);
  return st;
}

BdlResult basic_double_link(const CurveIdeal& C, const Polynomial& f, int h, std::uint64_t seed, bool check_iso) {
  const RingPtr& R = C.ring();
  require_p3(R);
  if (h <= 0) throw Error(Errc::InvalidArgument, "a basic double link needs h > 0");
  if (f.is_zero() || !f.degree() || !ideal_of(C).contains(f))
    throw Error(Errc::BadSurface, "f must be a nonzero form in the ideal");
  const Field& fld = R->field();
  Rng rng(seed);
  Polynomial g;
  bool ok = false;
  for (int k = 0; k < 32 && !ok; ++k) {
    g = R->random_form(h, rng);
    ok = !g.is_zero() && modgb::ideal_height(Ideal::ideal(R, {f, g})) == 2;
  }
  if (!ok) throw Error(Errc::GenericityFailure, "no form of degree " + std::to_string(h) + " meets the surface properly");
  std::vector<Polynomial> gens{f};
  for (const auto& p : ideal_of(C).polys()) gens.push_back(ring::mul(g, p, fld));
  BdlResult out;
  out.g = g;
  out.curve = curve_of(modgb::saturate(Ideal::ideal(R, gens)));
  out.step = step_from_linear_equivalence(C, out.curve, f, g, Polynomial::constant(1), seed, check_iso);
  out.step.origin = "bdl";
  return out;
}

namespace {

NTypeResolution side_of(const BiliaisonStep& step, const Extraverti& x, const Vec& lifted, const Vec& sec,
                        bool from_side) {
  const RingPtr& R = step.E.ring();
  NTypeResolution out;
  out.curve = from_side ? step.from : step.to;
  out.twist = from_side ? step.from_twist : step.to_twist;
  out.N = x.F;
  std::vector<std::pair<int, Vec>> secs;
  for (int i = 0; i < x.sections.cols(); ++i) secs.push_back({x.L_twists[i], x.sections.column(i)});
  secs.push_back({degree_in(sec, step.E.module().cover()), lifted});
  std::stable_sort(secs.begin(), secs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Vec> cols;
  for (auto& [d, v] : secs) {
    out.L_twists.push_back(d);
    cols.push_back(v);
  }
  out.sections = GradedMatrix(x.F.module().cover(), FreeModule(R, out.L_twists), cols);
  auto emb = sheafcoh::rank_one_embedding(quotient_by(step.E.module(), {sec}));
  out.surjection = compose(emb.row, x.to_input);
  return out;
}

}  // namespace

std::pair<NTypeResolution, NTypeResolution> shared_resolutions(const BiliaisonStep& step) {
  auto x = extraverti_extension(step.E, {step.s, step.t});
  return {side_of(step, x, x.lifted[0], step.s, true), side_of(step, x, x.lifted[1], step.t, false)};
}

BiliaisonStep descending_step(const NTypeResolution& A, const NTypeResolution& B, std::uint64_t seed) {
  if (!same_module(A.N.module(), B.N.module()))
    throw Error(Errc::TwistsNotComparable, "the two resolutions do not share their module");
  if (A.r() != B.r()) throw Error(Errc::TwistsNotComparable, "different numbers of sections");
  int k = 0;
  while (k < A.r() && A.L_twists[k] == B.L_twists[k]) ++k;
  if (k == A.r()) throw Error(Errc::TwistsNotComparable, "equal twists; use the height zero chain");
  if (A.L_twists[k] > B.L_twists[k])
    throw Error(Errc::TwistsNotComparable, "the first curve is the one admitting a descent");
  return descending_step(B, k, A.L_twists[k], seed);
}

BiliaisonStep descending_step(const NTypeResolution& B, int k, int d, std::uint64_t seed) {
  const int r = B.r();
  if (k < 0 || k >= r || d >= B.L_twists[k]) throw Error(Errc::TwistsNotComparable, "need d < b_k");
  const auto& N = B.N.module();
  const RingPtr& R = N.ring();
  const Field& fld = R->field();
  std::vector<Vec> t(B.sections.columns());
  auto P1 = quotient_by(N, std::vector<Vec>(t.begin(), t.begin() + k));
  Rng rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    // step 1: general s' in degree d with N/(t_1..t_{k-1}, s') satisfying T
    auto sq = section_quotient_impl(P1, r + 1 - k, d, rng, 32);
    // step 2: t'_i = t_i + f_i t_k until the rank one quotient satisfies T
    std::vector<Vec> tp;
    bool ok = false;
    for (int a2 = 0; a2 < 32 && !ok; ++a2) {
      tp.clear();
      for (int i = k + 1; i < r; ++i) {
        Polynomial f = R->random_form(B.L_twists[i] - B.L_twists[k], rng);
        tp.push_back(modgb::add(t[i], modgb::mul_poly(t[k], f, fld), fld));
      }
      ok = passes_T(quotient_by(sq.raw, tp), 1);
    }
    if (!ok) continue;
    // step 3: rank two module with sections t_k and s'
    auto E2 = quotient_by(P1, tp);
    auto st = elementary_biliaison_rank2(E2, t[k], sq.section, seed + attempt);
    if (!ideal_of(st.from).equals(B.curve.ideal)) throw Error(Errc::GenericityFailure, "descent lost the curve");
    st.origin = "descent";
    return st;
  }
  throw Error(Errc::GenericityFailure, "no perturbation of the sections gave a quotient satisfying T");
}

std::vector<int> dissocie_kernel(const PsiMap& f) {
  GradedMatrix K = modgb::kernel_modulo(f.map, f.target.relations());
  auto sq = modgb::subquotient(K, f.source.relations());
  auto p = modgb::prune(sq.pres);
  if (p.pres.relations().cols() != 0) throw Error(Errc::KernelNotDissocie, "kernel is not free");
  std::vector<int> d = p.pres.cover().degrees();
  std::sort(d.begin(), d.end());
  return d;
}

PsiMeet psi_meet(const PsiMap& f1, const PsiMap& f2) {
  if (!(f1.target.cover() == f2.target.cover()))
    throw Error(Errc::InvalidArgument, "psi maps have different targets");
  auto l1 = dissocie_kernel(f1);
  auto l2 = dissocie_kernel(f2);
  const Field& fld = f1.map.ring()->field();
  std::vector<Vec> neg;
  for (const auto& c : f2.map.columns()) neg.push_back(modgb::scale(c, fld.neg(1), fld));
  GradedMatrix diff = concat(f1.map, GradedMatrix(f2.map.target(), f2.map.source(), neg));
  GradedMatrix K = modgb::kernel_modulo(diff, f1.target.relations());
  auto sq = modgb::subquotient(K, direct_sum(f1.source.relations(), f2.source.relations()));
  std::vector<Vec> none;
  std::vector<int> kept;
  PsiMeet out;
  out.F = SheafModule::from_presentation(sq.pres, none, &kept);
  const int n1 = f1.source.num_generators(), n2 = f2.source.num_generators();
  std::vector<Vec> p1, p2;
  for (int k : kept) {
    p1.push_back(modgb::restrict_components(sq.elements[k], 0, n1));
    p2.push_back(modgb::restrict_components(sq.elements[k], n1, n1 + n2));
  }
  const FreeModule& fc = out.F.module().cover();
  out.to_first = {out.F.module(), f1.source, GradedMatrix(f1.source.cover(), fc, p1)};
  out.to_second = {out.F.module(), f2.source, GradedMatrix(f2.source.cover(), fc, p2)};
  out.kernel_first = dissocie_kernel(out.to_first);
  out.kernel_second = dissocie_kernel(out.to_second);
  if (out.kernel_first != l2 || out.kernel_second != l1)
    throw Error(Errc::KernelNotDissocie, "fibered sum kernels do not match the given kernels");
  return out;
}

namespace {

// W = (F, g) with deg F = n and deg g = m: the moves of the empty scheme case.
std::optional<BiliaisonStep> ci_move(const CurveIdeal& W, const Polynomial& F, int m, Rng& rng,
                                     std::uint64_t seed, std::string& note) {
  const RingPtr& R = W.ring();
  const int n = *F.degree();
  Ideal f = Ideal::ideal(R, {F});
  Polynomial g;
  for (const auto& p : modgb::minimalize(W.ideal).polys())
    if (p.degree() == m && !f.contains(p)) {
      g = p;
      break;
    }
  if (g.is_zero() || !Ideal::ideal(R, {F, g}).equals(W.ideal))
    throw Error(Errc::GenericityFailure, "empty residual but the curve is not a complete intersection");
  if (m == 1 && n == 1) {
    note = "complete intersection of two planes: minimal among nonempty curves";
    return std::nullopt;
  }
  Polynomial Y = F, other = g;
  int deg_other = m;
  if (m == 1) {
    Y = g;
    other = F;
    deg_other = n;
  }
  for (int k = 0; k < 32; ++k) {
    Polynomial l = R->random_form(1, rng);
    Ideal J = Ideal::ideal(R, {Y, l});
    if (modgb::ideal_height(J) != 2) continue;
    auto W2 = CurveIdeal::from_ideal(J);
    auto st = step_from_linear_equivalence(W, W2, Y, l, other, seed + k);
    st.origin = deg_other == m ? "ci-residual" : "ci-swap";
    note = "complete intersection (" + std::to_string(n) + "," + std::to_string(m) + ")";
    return st;
  }
  throw Error(Errc::GenericityFailure, "no plane section of the surface");
}

}  // namespace

DescentLog descend_to_minimal(const CurveIdeal& C, std::uint64_t seed) {
  if (C.empty) throw Error(Errc::InvalidArgument, "descent starts from a nonempty curve");
  require_p3(C.ring());
  DescentLog log;
  log.start = C;
  CurveIdeal cur = C;
  Rng rng(seed);
  const int bound = C.degree + 2;
  for (int iter = 0; iter < bound; ++iter) {
    auto B = n_type_resolution(cur, 0);
    const int r = B.r();
    std::optional<BiliaisonStep> step;
    std::vector<std::string> tried;
    std::vector<Vec> t(B.sections.columns());
    for (int k = 0; k < r && !step; ++k) {
      auto P1 = quotient_by(B.N.module(), std::vector<Vec>(t.begin(), t.begin() + k));
      int lo = *std::min_element(P1.cover().degrees().begin(), P1.cover().degrees().end());
      for (int d = lo; d < B.L_twists[k] && !step; ++d) {
        Rng frng(rng());
        auto f = feasibility_impl(P1, r + 1 - k, d, frng);
        if (!f.feasible) {
          tried.push_back("k=" + std::to_string(k + 1) + " d=" + std::to_string(d) + ": " + f.note);
          continue;
        }
        log.trail.push_back("degree " + std::to_string(cur.degree) + ": feasible section k=" + std::to_string(k + 1) +
                            " d=" + std::to_string(d) + " < b_k=" + std::to_string(B.L_twists[k]));
        step = descending_step(B, k, d, rng());
      }
    }
    if (!step) {
      log.minimality = tried;
      break;
    }
    if (!step->to.empty) {
      cur = step->to;
      log.steps.push_back(std::move(*step));
      continue;
    }
    log.passed_empty = true;
    log.ci_class = true;
    std::string note;
    auto ci = ci_move(cur, step->surface, -step->height, rng, rng(), note);
    log.trail.push_back("empty residual: " + note);
    if (!ci) {
      log.minimality.push_back(note);
      break;
    }
    cur = ci->to;
    log.steps.push_back(std::move(*ci));
  }
  log.terminal = cur;
  return log;
}

std::string to_string(EquivalenceDecision::Kind k) {
  switch (k) {
    case EquivalenceDecision::Kind::equivalent:
      return "equivalent";
    case EquivalenceDecision::Kind::inequivalent:
      return "inequivalent";
    default:
      return "inconclusive";
  }
}

EquivalenceDecision same_biliaison_class(const CurveIdeal& C1, const CurveIdeal& C2, std::uint64_t seed) {
  require_p3(C1.ring());
  auto m1 = rao_of(C1), m2 = rao_of(C2);
  EquivalenceDecision d;
  if (m1.is_zero() && m2.is_zero()) {
    d.kind = EquivalenceDecision::Kind::equivalent;
    d.acm_class = true;
    d.reason = "both Rao modules vanish: arithmetically Cohen-Macaulay class";
    return d;
  }
  auto r = sheafcoh::iso_up_to_shift(m1, m2, std::nullopt, seed);
  d.shift = r.shift;
  switch (r.kind) {
    case IsoResult::Kind::isomorphic:
      d.kind = EquivalenceDecision::Kind::equivalent;
      d.reason = "Rao modules isomorphic up to shift";
      break;
    case IsoResult::Kind::not_isomorphic:
      d.kind = EquivalenceDecision::Kind::inequivalent;
      d.reason = dims_shifted(m1, m2, r.shift) ? "Hilbert functions align but no isomorphism exists"
                                               : "Hilbert functions admit no alignment";
      break;
    default:
      d.kind = EquivalenceDecision::Kind::inconclusive;
      d.reason = "Hilbert functions align; random homomorphisms were all singular";
  }
  return d;
}

namespace {

void chain(const ModulePresentation& N, std::vector<Vec> s, std::vector<Vec> t, Rng& rng,
           std::vector<BiliaisonStep>& out) {
  const int r = static_cast<int>(s.size());
  if (r == 1) {
    out.push_back(elementary_biliaison_rank2(N, s[0], t[0], rng()));
    return;
  }
  int d = degree_in(s[r - 1], N.cover());
  auto F = quotient_by(N, std::vector<Vec>(s.begin(), s.end() - 1));
  auto G = quotient_by(N, std::vector<Vec>(t.begin(), t.end() - 1));
  for (int k = 0; k < 32; ++k) {
    Vec sp = N.normal_form(random_element(N.cover(), d, rng));
    if (sp.is_zero()) continue;
    if (!passes_T(quotient_by(F, {sp}), 1) || !passes_T(quotient_by(G, {sp}), 1)) continue;
    out.push_back(elementary_biliaison_rank2(F, s[r - 1], sp, rng()));
    Vec last = t[r - 1];
    auto Np = quotient_by(N, {sp});
    s.pop_back();
    t.pop_back();
    std::vector<BiliaisonStep> inner;
    chain(Np, s, t, rng, inner);
    for (auto& x : inner) out.push_back(std::move(x));
    out.push_back(elementary_biliaison_rank2(G, sp, last, rng()));
    return;
  }
  throw Error(Errc::GenericityFailure, "no common section serves both curves");
}

}  // namespace

ConnectResult connect_minimal(const CurveIdeal& V, const CurveIdeal& W, std::uint64_t seed) {
  require_p3(V.ring());
  if (V.empty || W.empty) throw Error(Errc::InvalidArgument, "connect needs nonempty curves");
  auto A = n_type_resolution(V, 0);
  const RingPtr& R = V.ring();
  const auto& N = A.N.module();
  auto target = SheafModule::of_ideal(W.ideal);
  auto hom = homalg::hom_presentation(N, target.module());
  auto wg = modgb::minimalize(W.ideal).generators();
  GradedMatrix wrow(FreeModule(R, {0}), target.module().cover(), wg);
  auto basis = modgb::standard_basis_in_degree(hom.sq.pres.relation_module(), 0);
  if (basis.empty()) throw Error(Errc::TwistsNotComparable, "no degree zero map onto the second ideal");
  Rng rng(seed);
  const Field& fld = R->field();
  for (int k = 0; k < 32; ++k) {
    Vec phi;
    for (const auto& b : basis) {
      Scalar c = ring::random_scalar(fld, rng);
      for (const auto& tm : b.terms())
        phi = modgb::add(phi, modgb::scale(modgb::mul_term(hom.sq.elements[tm.comp], tm.mono, tm.coef, fld), c, fld),
                         fld);
    }
    if (phi.is_zero()) continue;
    GradedMatrix psi = compose(wrow, hom.as_matrix(phi));
    if (!Ideal::ideal(R, psi.entries()[0]).equals(W.ideal)) continue;
    auto sq = modgb::subquotient(modgb::syzygy_module(psi), N.relations());
    auto p = modgb::prune(sq.pres);
    if (p.pres.relations().cols() != 0) continue;
    std::vector<std::pair<int, Vec>> tv;
    for (int j : p.kept) tv.push_back({degree_in(sq.elements[j], N.cover()), sq.elements[j]});
    std::stable_sort(tv.begin(), tv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> bt;
    std::vector<Vec> t;
    for (auto& [d, v] : tv) {
      bt.push_back(d);
      t.push_back(v);
    }
    if (bt != A.L_twists) throw Error(Errc::TwistsNotComparable, "section twists differ; a descent applies first");
    ConnectResult out;
    out.twists = bt;
    chain(N, A.sections.columns(), t, rng, out.steps);
    return out;
  }
  throw Error(Errc::GenericityFailure, "no surjection with free kernel onto the second ideal");
}

}  // namespace bil::liaison
