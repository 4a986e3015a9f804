#include "bil/cli/suites.hpp"

#include <random>

#include "bil/cli/commands.hpp"
#include "bil/gorenstein/gorenstein.hpp"
#include "bil/liaison/liaison.hpp"
#include "bil/oracle.hpp"
#include "bil/ring/parse.hpp"

namespace bil::cli {

using homalg::FiniteLengthModule;
using modgb::GradedMatrix;
using modgb::Ideal;
using modgb::ModulePresentation;
using modgb::Vec;
using ring::Polynomial;
using ring::RingContext;
using ring::RingPtr;
using sheafcoh::CurveIdeal;
using sheafcoh::SheafModule;
using Rng = std::mt19937_64;

bool SuiteResult::ok() const {
  if (assertions.empty()) return false;
  for (const auto& a : assertions)
    if (!a.ok) return false;
  return true;
}

void SuiteResult::check(const std::string& name, bool ok, Json details) {
  assertions.push_back({name, ok, std::move(details)});
}

namespace {

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (auto g : gens) v.push_back(ring::parse_polynomial(g, *R));
  return Ideal::ideal(R, v);
}

CurveIdeal line(const RingPtr& R) { return CurveIdeal::from_ideal(ideal_of(R, {"x0", "x1"})); }
CurveIdeal skew(const RingPtr& R) {
  return CurveIdeal::from_ideal(ideal_of(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}));
}
CurveIdeal twisted_cubic(const RingPtr& R) {
  return CurveIdeal::from_ideal(ideal_of(R, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}));
}
CurveIdeal ci23(const RingPtr& R) { return CurveIdeal::from_ideal(ideal_of(R, {"x0^2 + x1*x2", "x3^3 - x0*x1*x2"})); }

RingPtr quadric() {
  auto T = RingContext::polynomial(32003, 5);
  return modgb::make_hypersurface(32003, 5, ring::parse_polynomial("x0*x1 + x2*x3 + x4^2", *T));
}

Json dims_json(const std::map<int, int>& d) {
  Json j = Json::object();
  for (const auto& [n, v] : d) j[std::to_string(n)] = v;
  return j;
}

/// sum of random forms times minimal generators, landing in degree n
Polynomial random_member(const Ideal& I, int n, Rng& rng) {
  const auto& R = *I.ring();
  Polynomial f;
  for (const auto& g : modgb::minimalize(I).polys()) {
    int d = *g.degree();
    if (d > n) continue;
    f = ring::add(f, ring::mul(R.random_form(n - d, rng), g, R.field()), R.field());
  }
  return f;
}

int min_degree(const Ideal& I) {
  int m = 1 << 20;
  for (const auto& g : I.polys()) m = std::min(m, *g.degree());
  return m;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// dim (S/I)_n by linear algebra on monomial multiples
std::int64_t brute_quotient_dim(const Ideal& I, int n) {
  if (n < 0) return 0;
  const auto& R = *I.ring();
  auto mult = oracle::multiples_in_degree(I.generators(), I.ambient(), n, R);
  return binom(n + R.num_vars() - 1, R.num_vars() - 1) - oracle::span_dim(mult, R.field().characteristic());
}

/// random invertible linear change of coordinates applied to the ideal
CurveIdeal moved(const CurveIdeal& C, Rng& rng) {
  const RingPtr& R = C.ring();
  const auto& F = R->field();
  const int n = R->num_vars();
  std::vector<Polynomial> images;
  while (true) {
    homalg::DenseMatrix m(n, n);
    images.clear();
    for (int i = 0; i < n; ++i) {
      std::vector<ring::PTerm> t;
      for (int j = 0; j < n; ++j) {
        m(i, j) = ring::random_scalar(F, rng);
        t.push_back({ring::Monomial::variable(j), m(i, j)});
      }
      images.push_back(Polynomial(std::move(t), F));
    }
    if (kernels::determinant(m, F) != 0) break;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : modgb::minimalize(C.ideal).polys()) gens.push_back(modgb::substitute_linear(g, images, F));
  return CurveIdeal::from_ideal(Ideal::ideal(R, gens));
}

IdealFile as_file(const Ideal& I, const std::string& name) { return parse_ideal_file(ideal_file_text(I), name); }

bool iso0(const FiniteLengthModule& a, const FiniteLengthModule& b) {
  return sheafcoh::iso_up_to_shift(a, b, 0).kind == sheafcoh::IsoResult::Kind::isomorphic;
}

}  // namespace

SuiteResult suite_resolution_shape(std::uint64_t) {
  SuiteResult s;
  s.criterion = 1;
  s.title = "minimal resolution of the line";
  auto R = RingContext::p3();
  auto I = ideal_of(R, {"x0", "x1"});
  auto res = homalg::minimal_free_resolution(ModulePresentation::of_submodule(I));
  auto b = homalg::betti_table(res);
  homalg::BettiTable want;
  want.b[{0, 1}] = 2;
  want.b[{1, 2}] = 1;
  s.check("betti_0_-1^2_-2", b == want, Json{{"betti", b.to_string()}});
  s.check("complex", homalg::is_complex(res));
  s.outputs["betti"] = b.to_string();
  return s;
}

SuiteResult suite_rao(std::uint64_t) {
  SuiteResult s;
  s.criterion = 2;
  s.title = "Rao modules against brute force";
  auto R = RingContext::p3();
  s.check("line_zero", sheafcoh::rao_module(line(R)).is_zero());
  auto sk = skew(R);
  auto M = sheafcoh::rao_module(sk);
  s.check("skew_k_in_degree_0", M.dims() == std::map<int, int>{{0, 1}}, Json{{"dims", dims_json(M.dims())}});
  auto l1 = ideal_of(R, {"x0", "x1"}), l2 = ideal_of(R, {"x2", "x3"});
  Json table = Json::object();
  bool all = true;
  for (int n = -2; n <= 4; ++n) {
    std::int64_t h0 = brute_quotient_dim(l1, n) + brute_quotient_dim(l2, n);
    std::int64_t h1 = h0 - brute_quotient_dim(sk.ideal, n);
    table[std::to_string(n)] = h1;
    if (M.dim(n) != h1) all = false;
  }
  s.check("skew_oracle_n_-2..4", all, Json{{"oracle", table}});
  return s;
}

SuiteResult suite_bdl_shift(std::uint64_t seed, int count, int iso_every) {
  SuiteResult s;
  s.criterion = 3;
  s.title = "basic double link shift law";
  auto R = RingContext::p3();
  Rng rng(seed);
  std::vector<CurveIdeal> bases{line(R), skew(R), twisted_cubic(R)};
  std::vector<CurveIdeal> last = bases;
  int isos = 0, passed = 0;
  for (int i = 0; i < count; ++i) {
    const int b = i % 3;
    // every fourth case continues a tower on the same base curve
    CurveIdeal C = (i % 4 == 3 && last[b].degree <= 8) ? last[b] : bases[b];
    const int lo = min_degree(C.ideal);
    const int n = std::max(lo, 1 + static_cast<int>(rng() % 3));
    const int h = 1 + static_cast<int>(rng() % 3);
    const bool iso = i % iso_every == 0;
    Polynomial f = random_member(C.ideal, n, rng);
    std::string name = "bdl_" + std::to_string(i);
    try {
      auto r = liaison::basic_double_link(C, f, h, rng(), iso);
      auto m0 = sheafcoh::rao_module(C), m1 = sheafcoh::rao_module(r.curve);
      bool deg = r.curve.degree == C.degree + h * n;
      bool shift = m1.dims() == m0.shifted(-h).dims();
      bool ok = deg && shift && r.step.verified();
      Json d{{"start_degree", C.degree}, {"surface_degree", n}, {"height", h}, {"degree", r.curve.degree}};
      if (iso) {
        bool full = r.step.rao_iso.value_or(false);
        d["rao_iso"] = full;
        ok = ok && full;
        if (full) ++isos;
      }
      s.check(name, ok, d);
      if (ok) ++passed;
      last[b] = r.curve;
    } catch (const Error& e) {
      s.check(name, false, Json{{"error", e.what()}});
    }
  }
  s.check("at_least_10_isomorphisms", isos >= 10, Json{{"isomorphisms", isos}});
  s.outputs["cases"] = count;
  s.outputs["passed"] = passed;
  s.outputs["isomorphisms"] = isos;
  return s;
}

SuiteResult suite_descent(std::uint64_t seed) {
  SuiteResult s;
  s.criterion = 4;
  s.title = "strict descent";
  auto R = RingContext::p3();
  Rng rng(seed);
  auto sk = skew(R);
  CurveIdeal C = sk;
  for (int k = 0; k < 3; ++k) {
    auto f = random_member(C.ideal, min_degree(C.ideal), rng);
    C = liaison::basic_double_link(C, f, 1, rng()).curve;
  }
  auto check_log = [&](const std::string& tag, const liaison::DescentLog& log, int want_degree) {
    bool neg = true;
    for (const auto& st : log.steps)
      if (!st.identity && st.height >= 0) neg = false;
    bool verified = true;
    for (const auto& st : log.steps) verified = verified && st.verified();
    Json hs = Json::array();
    for (const auto& st : log.steps) hs.push_back(st.height);
    s.check(tag + "_heights_negative", neg && !log.steps.empty(), Json{{"heights", hs}});
    s.check(tag + "_steps_verified", verified);
    s.check(tag + "_terminal_degree", log.terminal.degree == want_degree, Json{{"degree", log.terminal.degree}});
    s.outputs[tag] = Json{{"start_degree", log.start.degree}, {"steps", log.steps.size()}, {"terminal", log.terminal.degree}};
  };
  auto tower = liaison::descend_to_minimal(C, seed);
  check_log("bdl3_skew", tower, 2);
  auto m = sheafcoh::rao_module(tower.terminal);
  s.check("bdl3_skew_terminal_rao_k", m.total_dim() == 1 &&
                                          sheafcoh::iso_up_to_shift(sheafcoh::rao_module(sk), m).kind ==
                                              sheafcoh::IsoResult::Kind::isomorphic,
          Json{{"dims", dims_json(m.dims())}});
  auto ci = liaison::descend_to_minimal(ci23(R), seed);
  check_log("ci23", ci, 1);
  return s;
}

SuiteResult suite_extraverti(std::uint64_t seed, int count) {
  SuiteResult s;
  s.criterion = 5;
  s.title = "extraverti construction";
  auto R = RingContext::p3();
  Rng rng(seed);
  std::vector<CurveIdeal> bases{line(R), skew(R), twisted_cubic(R), ci23(R)};
  for (int i = 0; i < count; ++i) {
    std::string name = "curve_" + std::to_string(i);
    try {
      CurveIdeal C = bases[i % bases.size()];
      if (i >= 4) C = moved(C, rng);
      if (i >= 8) C = liaison::basic_double_link(C, random_member(C.ideal, min_degree(C.ideal), rng), 1, rng()).curve;
      auto E = SheafModule::of_ideal(C.ideal);
      auto F = liaison::build_extraverti(E);
      bool ext = F.ext(1).is_zero();
      bool t = sheafcoh::check_condition_T(F).ok();
      bool iso = iso0(sheafcoh::h1_star(E), sheafcoh::h1_star(F));
      s.check(name, ext && t && iso,
              Json{{"degree", C.degree}, {"rank", F.rank()}, {"ext1_zero", ext}, {"condition_T", t}, {"h1_iso", iso}});
    } catch (const Error& e) {
      s.check(name, false, Json{{"error", e.what()}});
    }
  }
  return s;
}

SuiteResult suite_psi(std::uint64_t seed, int count) {
  SuiteResult s;
  s.criterion = 6;
  s.title = "psi invariance of H1";
  auto R = RingContext::p3();
  const auto& fld = R->field();
  Rng rng(seed);
  std::vector<CurveIdeal> bases{skew(R), twisted_cubic(R)};
  bases.push_back(liaison::basic_double_link(bases[0], ring::parse_polynomial("x0*x2", *R), 1, 2).curve);
  bases.push_back(liaison::basic_double_link(bases[0], ring::parse_polynomial("x1*x3", *R), 2, 4).curve);
  for (int i = 0; i < count; ++i) {
    std::string name = "extension_" + std::to_string(i);
    try {
      auto base = SheafModule::of_ideal(bases[i % bases.size()].ideal);
      const auto& res = base.resolution();
      auto ext = homalg::ext_module(res, 1);
      auto h1 = sheafcoh::h1_star(base);
      ModulePresentation A(res.d[0]);
      std::vector<Vec> cs;
      if (ext.is_zero()) {
        // split extension by a free summand
        cs.push_back(Vec());
      } else {
        for (const auto& c : ext.cocycles) {
          int d = static_cast<int>(rng() % 2);
          Vec v = modgb::mul_poly(c, R->random_form(d, rng), fld);
          cs.push_back(v.is_zero() ? c : v);
        }
      }
      GradedMatrix xi;
      if (cs.size() == 1 && cs[0].is_zero()) {
        xi = GradedMatrix(modgb::FreeModule(R, {1}), res.free(1));
      } else {
        xi = homalg::cocycle_map(cs, res.free(1));
      }
      auto E = homalg::yoneda_extension(A, xi.target(), xi);
      auto big = SheafModule::from_presentation(E.E);
      auto h1b = sheafcoh::h1_star(big);
      bool hf = h1.dims() == h1b.dims();
      bool iso = iso0(h1, h1b);
      s.check(name, hf && iso, Json{{"dissocie_rank", xi.target().rank()}, {"hilbert_equal", hf}, {"iso", iso}});
    } catch (const Error& e) {
      s.check(name, false, Json{{"error", e.what()}});
    }
  }
  return s;
}

SuiteResult suite_second_syzygy(std::uint64_t) {
  SuiteResult s;
  s.criterion = 7;
  s.title = "second syzygy of the residue field";
  for (auto R : {RingContext::p3(), quadric()}) {
    std::string tag = R->is_quotient() ? "quadric" : "p3";
    auto k = FiniteLengthModule::from_linear_data(
        R, {{0, 1}}, std::vector<std::map<int, homalg::DenseMatrix>>(R->num_vars()));
    auto syz = gorenstein::second_syzygy(k, R);
    s.check(tag + "_h1_is_k", syz.ok() && syz.h1.dims() == std::map<int, int>{{0, 1}},
            Json{{"dims", dims_json(syz.h1.dims())}, {"ext1_zero", syz.ext1_zero}});
    // h1(E(n)) = h0(L0(n)) - h0(L1(n)) + h0(E(n)) on an ACM variety
    auto S = ModulePresentation::free(modgb::FreeModule(R, {0}));
    auto hf = [&](const modgb::FreeModule& F, int n) {
      std::int64_t t = 0;
      for (int d : F.degrees()) t += homalg::hilbert_function(S, n - d);
      return t;
    };
    bool all = true;
    for (int n = -2; n <= 4; ++n) {
      auto h1 = hf(syz.L0, n) - hf(syz.L1, n) + homalg::hilbert_function(syz.E.module(), n);
      if (h1 != syz.h1.dim(n)) all = false;
    }
    s.check(tag + "_hilbert_oracle", all);
  }
  return s;
}

SuiteResult suite_separation(std::uint64_t seed) {
  SuiteResult s;
  s.criterion = 8;
  s.title = "Rao module separation on the quadric";
  auto Q = quadric();
  auto E = gorenstein::extraverti_module(SheafModule::of_ideal(ideal_of(Q, {"x0", "x2", "x4"})));
  auto t = gorenstein::mcm_triple(E, seed);
  auto pruned = modgb::prune(t.P).pres;
  s.check("line_on_quadric_M_zero", t.M.is_zero());
  s.check("line_on_quadric_P_mcm", gorenstein::is_mcm(t.P));
  s.check("line_on_quadric_P_not_free",
          pruned.relations().cols() > 0 &&
              gorenstein::free_summand_degrees(t.P).size() < static_cast<std::size_t>(pruned.num_generators()),
          Json{{"generators", pruned.num_generators()}, {"relations", pruned.relations().cols()}});
  auto R = RingContext::p3();
  std::vector<std::pair<std::string, CurveIdeal>> corpus{
      {"line", line(R)}, {"skew", skew(R)}, {"twisted_cubic", twisted_cubic(R)}, {"ci23", ci23(R)}};
  for (const auto& [name, C] : corpus) {
    auto Ec = gorenstein::extraverti_module(SheafModule::of_ideal(C.ideal));
    auto tc = gorenstein::mcm_triple(Ec, seed);
    s.check(name + "_P_free", modgb::prune(tc.P).pres.relations().cols() == 0,
            Json{{"rank", tc.P.num_generators()}});
  }
  return s;
}

SuiteResult suite_equivalence(std::uint64_t seed) {
  SuiteResult s;
  s.criterion = 9;
  s.title = "equivalence decisions";
  auto R = RingContext::p3();
  Rng rng(seed);
  auto sk = skew(R);
  auto b1 = liaison::basic_double_link(sk, random_member(sk.ideal, 2, rng), 1, rng()).curve;
  auto b2 = liaison::basic_double_link(b1, random_member(b1.ideal, min_degree(b1.ideal), rng), 2, rng()).curve;
  auto rep = cmd_equiv(as_file(sk.ideal, "skew"), as_file(b2.ideal, "bdl2"), seed);
  auto& o = rep.outputs;
  s.check("skew_vs_bdl2_equivalent_shift_3",
          o.value("decision", "") == "equivalent" && o.contains("shift") && o["shift"] == 3,
          Json{{"decision", o.value("decision", "")}, {"shift", o.contains("shift") ? o["shift"] : Json()}});
  auto rep2 = cmd_equiv(as_file(line(R).ideal, "line"), as_file(sk.ideal, "skew"), seed);
  s.check("line_vs_skew_inequivalent", rep2.outputs.value("decision", "") == "inequivalent");
  auto tc = twisted_cubic(R);
  auto btc = liaison::basic_double_link(tc, random_member(tc.ideal, 2, rng), 1, rng()).curve;
  auto rep3 = cmd_equiv(as_file(tc.ideal, "twisted_cubic"), as_file(btc.ideal, "bdl_tc"), seed);
  s.check("twisted_cubic_vs_bdl_acm_class",
          rep3.outputs.value("decision", "") == "equivalent" && rep3.outputs.value("acm_class", false));
  return s;
}

SuiteResult suite_engine_oracles(std::uint64_t seed, int count) {
  SuiteResult s;
  s.criterion = 10;
  s.title = "engine against brute force";
  auto R = RingContext::p3();
  const auto& fld = R->field();
  const std::uint64_t p = fld.characteristic();
  Rng rng(seed);
  auto random_ideal = [&](int ngens, int maxdeg) {
    std::vector<Polynomial> g;
    for (int i = 0; i < ngens; ++i) {
      int d = 1 + static_cast<int>(rng() % maxdeg);
      auto mons = R->monomials_of_degree(d);
      std::vector<ring::PTerm> t;
      int k = 1 + static_cast<int>(rng() % 4);
      for (int j = 0; j < k; ++j) t.push_back({mons[rng() % mons.size()], ring::random_nonzero_scalar(fld, rng)});
      Polynomial f(std::move(t), fld);
      if (!f.is_zero()) g.push_back(f);
    }
    return Ideal::ideal(R, g);
  };
  int members = 0, member_bad = 0, syz = 0, syz_bad = 0, resolutions = 0, res_bad = 0;
  const int rounds = (count + 5) / 6;
  for (int it = 0; it < rounds; ++it) {
    Ideal I = random_ideal(2 + static_cast<int>(rng() % 2), 3);
    for (int d = 1; d <= 6; ++d) {
      auto mult = oracle::multiples_in_degree(I.generators(), I.ambient(), d, *R);
      int dimI = oracle::span_dim(mult, p);
      Polynomial f = R->random_form(d, rng);
      if (rng() % 2 && !mult.empty()) {
        f = Polynomial();
        for (int k = 0; k < 3; ++k)
          f = ring::add(f, ring::scale(mult[rng() % mult.size()].component(0), ring::random_scalar(fld, rng), fld), fld);
      }
      auto with = mult;
      with.push_back(Vec::from_polynomial(f, 0));
      bool member = oracle::span_dim(with, p) == dimI;
      ++members;
      if (I.contains(f) != member) ++member_bad;
    }
    GradedMatrix m = I.matrix();
    GradedMatrix sz = modgb::syzygy_module(m);
    if (!compose(m, sz).is_zero()) ++syz_bad;
    for (int d = 0; d <= 6; ++d) {
      std::vector<Vec> img;
      auto src = modgb::free_basis_in_degree(m.source(), d);
      for (const auto& b : src) img.push_back(m.apply(b));
      int rk = img.empty() ? 0 : oracle::span_dim(img, p);
      auto gen = oracle::multiples_in_degree(sz.columns(), m.source(), d, *R);
      int span = gen.empty() ? 0 : oracle::span_dim(gen, p);
      ++syz;
      if (span != static_cast<int>(src.size()) - rk) ++syz_bad;
    }
    auto res = homalg::minimal_free_resolution(ModulePresentation::quotient(I));
    ++resolutions;
    if (!homalg::is_complex(res) || !homalg::euler_characteristic_holds(res, 0, 10)) ++res_bad;
  }
  s.check("membership", members >= count && member_bad == 0, Json{{"instances", members}, {"mismatches", member_bad}});
  s.check("syzygy_kernels", syz >= count && syz_bad == 0, Json{{"instances", syz}, {"mismatches", syz_bad}});
  s.check("resolutions", res_bad == 0, Json{{"instances", resolutions}, {"failures", res_bad}});
  s.outputs = Json{{"membership", members}, {"syzygy", syz}, {"resolutions", resolutions}};
  return s;
}

std::vector<SuiteResult> run_suites(const std::string& level, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  auto guard = [&](int criterion, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const Error& e) {
      SuiteResult s;
      s.criterion = criterion;
      s.title = "aborted";
      s.check("completed", false, Json{{"error", e.what()}});
      out.push_back(std::move(s));
    }
  };
  guard(10, [&] { return suite_engine_oracles(seed); });
  if (level == "quick") return out;
  // every later suite trusts the engine
  if (!out.back().ok()) return out;
  guard(1, [&] { return suite_resolution_shape(seed); });
  guard(2, [&] { return suite_rao(seed); });
  guard(3, [&] { return suite_bdl_shift(seed); });
  guard(4, [&] { return suite_descent(seed); });
  guard(5, [&] { return suite_extraverti(seed); });
  guard(6, [&] { return suite_psi(seed); });
  guard(7, [&] { return suite_second_syzygy(seed); });
  guard(8, [&] { return suite_separation(seed); });
  guard(9, [&] { return suite_equivalence(seed); });
  return out;
}

}  // namespace bil::cli
