#include "bil/cli/commands.hpp"

#include <sstream>

#include "bil/cli/suites.hpp"
#include "bil/gorenstein/gorenstein.hpp"
#include "bil/liaison/liaison.hpp"
#include "bil/ring/parse.hpp"

namespace bil::cli {

using liaison::BiliaisonStep;
using modgb::ModulePresentation;
using sheafcoh::CurveIdeal;

namespace {

Json input_of(const IdealFile& f) {
  Json ring{{"p", f.p}, {"vars", f.vars}};
  if (f.relation) ring["rel"] = ring::print_polynomial(*f.ring->relation(), *f.ring);
  return Json{{"name", f.name}, {"sha256", f.sha256}, {"ring", ring}, {"generators", f.generators.size()}};
}

Json dims_json(const std::map<int, int>& d) {
  Json j = Json::object();
  for (const auto& [n, v] : d) j[std::to_string(n)] = v;
  return j;
}

Json betti_json(const homalg::BettiTable& t) {
  Json j = Json::array();
  for (const auto& [k, v] : t.b) j.push_back(Json::array({k.first, k.second, v}));
  return j;
}

Json polys_json(const std::vector<ring::Polynomial>& ps, const ring::RingContext& R) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(ring::print_polynomial(p, R));
  return j;
}

Json degrees_json(const std::vector<int>& d) { return Json(d); }

Json curve_json(const CurveIdeal& C) {
  Json j{{"degree", C.degree}, {"genus", C.genus}, {"empty", C.empty}};
  j["generators"] = C.empty ? Json::array({"1"}) : polys_json(modgb::minimalize(C.ideal).polys(), *C.ring());
  return j;
}

Json step_json(const BiliaisonStep& s) {
  Json j;
  j["origin"] = s.origin;
  j["from_degree"] = s.from.degree;
  j["to_degree"] = s.to.degree;
  j["height"] = s.height;
  j["surface_degree"] = s.surface_degree;
  j["surface"] = s.surface.is_zero() ? "0" : ring::print_polynomial(s.surface, *s.from.ring());
  j["identity"] = s.identity;
  j["degree_law"] = s.degree_law;
  j["rao_shift"] = s.rao_shift;
  j["linear_equivalence"] = s.linear_equivalence;
  if (s.rao_iso) j["rao_iso"] = *s.rao_iso;
  j["verified"] = s.verified();
  return j;
}

void require_p3(const IdealFile& f) {
  if (f.ring->is_quotient() || f.vars != 4)
    throw Error(Errc::UnsupportedRing, "this command works with curves in P^3 (vars=4, no relation)");
}

CurveIdeal curve_of(const IdealFile& f) {
  require_p3(f);
  return CurveIdeal::from_ideal(f.ideal);
}

template <class Body>
Report guarded(const std::string& command, std::uint64_t seed, Json inputs, Body&& body) {
  Report r;
  r.command = command;
  r.seed = seed;
  r.inputs = std::move(inputs);
  try {
    body(r);
  } catch (const Error& e) {
    record_error(r, e);
  }
  r.settle();
  return r;
}

}  // namespace

std::string ideal_file_text(const modgb::Ideal& I, const std::string& comment) {
  const auto& R = *I.ring();
  std::ostringstream os;
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "ring p=" << R.field().characteristic() << " vars=" << R.num_vars();
  if (R.is_quotient()) os << " rel=" << ring::print_polynomial(*R.relation(), R);
  os << "\n";
  for (const auto& p : modgb::minimalize(I).polys()) os << ring::print_polynomial(p, R) << "\n";
  return os.str();
}

Report cmd_info(const IdealFile& file, std::uint64_t seed) {
  return guarded("info", seed, Json::array({input_of(file)}), [&](Report& r) {
    const auto& R = file.ring;
    r.outputs["generators"] = polys_json(file.generators, *R);
    if (R->is_quotient() || file.vars != 4) {
      auto sat = modgb::saturate(file.ideal);
      r.outputs["input_saturated"] = sat.equals(file.ideal);
      r.outputs["height"] = modgb::ideal_height(sat);
      auto res = homalg::partial_resolution(ModulePresentation::quotient(sat), 4);
      r.outputs["betti_partial"] = betti_json(homalg::betti_table(res));
      r.outputs["note"] = "curve invariants are computed for P^3 only";
      r.check("resolution_complex", homalg::is_complex(res));
      return;
    }
    auto C = CurveIdeal::from_ideal(file.ideal);
    r.outputs["input_saturated"] = C.input_saturated;
    if (!C.input_saturated) r.outputs["warnings"] = Json::array({"input ideal was not saturated; invariants refer to its saturation"});
    r.outputs["curve"] = curve_json(C);
    if (C.empty) return;
    r.outputs["height"] = modgb::ideal_height(C.ideal);
    r.outputs["unmixed"] = true;
    auto res = homalg::minimal_free_resolution(ModulePresentation::quotient(C.ideal));
    r.outputs["betti"] = betti_json(homalg::betti_table(res));
    auto rao = sheafcoh::rao_module(C);
    r.outputs["rao_dims"] = dims_json(rao.dims());
    r.check("resolution_complex", homalg::is_complex(res));
    r.check("euler_characteristic", homalg::euler_characteristic_holds(res, -2, 12));
  });
}

Report cmd_bdl(const IdealFile& file, const std::string& f_spec, int h, std::uint64_t seed) {
  return guarded("bdl", seed, Json::array({input_of(file)}), [&](Report& r) {
    auto C = curve_of(file);
    const auto& R = file.ring;
    ring::Polynomial f;
    if (!f_spec.empty() && f_spec.find_first_not_of("0123456789") == std::string::npos) {
      std::size_t k = std::stoul(f_spec);
      if (k >= file.generators.size()) throw Error(Errc::InvalidArgument, "generator index out of range");
      f = file.generators[k];
    } else {
      f = ring::parse_polynomial(f_spec, *R, true);
    }
    auto b = liaison::basic_double_link(C, f, h, seed, true);
    int n = f.is_zero() ? 0 : *f.degree();
    r.outputs["f"] = ring::print_polynomial(f, *R);
    r.outputs["g"] = ring::print_polynomial(b.g, *R);
    r.outputs["h"] = h;
    r.outputs["start"] = curve_json(C);
    r.outputs["curve"] = curve_json(b.curve);
    r.outputs["step"] = step_json(b.step);
    auto m0 = sheafcoh::rao_module(C), m1 = sheafcoh::rao_module(b.curve);
    r.outputs["rao_dims_before"] = dims_json(m0.dims());
    r.outputs["rao_dims_after"] = dims_json(m1.dims());
    r.check("degree_formula", b.curve.degree == C.degree + h * n,
            Json{{"expected", C.degree + h * n}, {"found", b.curve.degree}});
    r.check("rao_shift", m1.dims() == m0.shifted(-h).dims());
    r.check("rao_iso", b.step.rao_iso.value_or(false));
    r.check("linear_equivalence", b.step.linear_equivalence);
    r.check("step_verified", b.step.verified());
  });
}

Report cmd_descend(const IdealFile& file, std::uint64_t seed) {
  return guarded("descend", seed, Json::array({input_of(file)}), [&](Report& r) {
    auto C = curve_of(file);
    auto log = liaison::descend_to_minimal(C, seed);
    r.outputs["start"] = curve_json(log.start);
    Json steps = Json::array();
    bool negative = true, decreasing = true;
    for (std::size_t i = 0; i < log.steps.size(); ++i) {
      const auto& s = log.steps[i];
      steps.push_back(step_json(s));
      r.check("step_" + std::to_string(i) + "_verified", s.verified());
      if (!s.identity && s.height >= 0) negative = false;
      if (s.to.degree >= s.from.degree && !s.identity) decreasing = false;
    }
    r.outputs["steps"] = steps;
    r.outputs["terminal"] = curve_json(log.terminal);
    r.outputs["terminal_rao_dims"] = dims_json(sheafcoh::rao_module(log.terminal).dims());
    r.outputs["passed_empty"] = log.passed_empty;
    r.outputs["ci_class"] = log.ci_class;
    r.outputs["minimality"] = log.minimality;
    r.outputs["trail"] = log.trail;
    r.check("heights_strictly_negative", negative);
    r.check("degrees_strictly_decreasing", decreasing);
  });
}

Report cmd_equiv(const IdealFile& a, const IdealFile& b, std::uint64_t seed) {
  return guarded("equiv", seed, Json::array({input_of(a), input_of(b)}), [&](Report& r) {
    auto C1 = curve_of(a), C2 = curve_of(b);
    auto d = liaison::same_biliaison_class(C1, C2, seed);
    r.outputs["decision"] = liaison::to_string(d.kind);
    if (d.kind == liaison::EquivalenceDecision::Kind::equivalent) r.outputs["shift"] = d.shift;
    r.outputs["acm_class"] = d.acm_class;
    r.outputs["reason"] = d.reason;
    r.outputs["rao_dims"] = Json::array({dims_json(sheafcoh::rao_module(C1).dims()),
                                         dims_json(sheafcoh::rao_module(C2).dims())});
    r.check("decision_reached", d.kind != liaison::EquivalenceDecision::Kind::inconclusive);
    if (d.kind == liaison::EquivalenceDecision::Kind::inconclusive) r.exit_code = kInconclusive;
  });
}

Report cmd_ntype(const IdealFile& file, std::uint64_t seed) {
  return guarded("ntype", seed, Json::array({input_of(file)}), [&](Report& r) {
    auto C = curve_of(file);
    auto res = liaison::n_type_resolution(C);
    r.outputs["curve"] = curve_json(C);
    r.outputs["L_twists"] = res.L_twists;
    r.outputs["N_rank"] = res.N.rank();
    r.outputs["N_generator_degrees"] = degrees_json(res.N.module().cover().degrees());
    r.outputs["N_relation_degrees"] = degrees_json(res.N.module().relations().source().degrees());
    r.check("exact", liaison::verify_exact(res));
    auto chk = liaison::verify_extraverti(sheafcoh::SheafModule::of_ideal(C.ideal), res.N);
    r.check("ext1_vanishes", chk.ext1_zero);
    r.check("condition_T", chk.condition_t);
    r.check("h1_preserved", chk.h1_preserved);
  });
}

Report cmd_triple(const IdealFile& file, std::uint64_t seed) {
  return guarded("triple", seed, Json::array({input_of(file)}), [&](Report& r) {
    const auto& R = file.ring;
    gorenstein::require_supported(R);
    auto I = modgb::saturate(file.ideal);
    auto E = gorenstein::extraverti_module(sheafcoh::SheafModule::of_ideal(I));
    auto t = gorenstein::mcm_triple(E, seed);
    auto free = gorenstein::free_summand_degrees(t.P);
    r.outputs["E_generator_degrees"] = degrees_json(E.module().cover().degrees());
    r.outputs["M_dims"] = dims_json(t.M.dims());
    r.outputs["M_star_dims"] = dims_json(homalg::FiniteLengthModule::from_presentation(t.M_star).dims());
    r.outputs["P_generator_degrees"] = degrees_json(t.P.cover().degrees());
    r.outputs["P_relation_degrees"] = degrees_json(t.P.relations().source().degrees());
    r.outputs["P_free_summands"] = degrees_json(free);
    r.outputs["P_stable_betti"] = betti_json(gorenstein::stable_betti(t.P, 3));
    r.outputs["P_free"] = t.P.relations().cols() == 0;
    r.outputs["alpha_shape"] = Json::array({t.alpha.rows(), t.alpha.cols()});
    r.check("ext1_vanishes", gorenstein::ext1_vanishes(E.module()));
    r.check("P_is_mcm", gorenstein::is_mcm(t.P));
    r.check("alpha_surjective", gorenstein::is_surjective(t.alpha, t.M_star));
    if (!R->is_quotient()) r.check("P_free_over_P3", t.P.relations().cols() == 0);
    auto rt = gorenstein::round_trip(t, seed);
    r.check("round_trip", rt.ok(), Json{{"rao_iso", rt.rao_iso}, {"p_stable", rt.p_stable}, {"e_betti", rt.e_betti}});
  });
}

Report cmd_connect_minimal(const IdealFile& a, const IdealFile& b, std::uint64_t seed) {
  return guarded("connect-minimal", seed, Json::array({input_of(a), input_of(b)}), [&](Report& r) {
    auto V = curve_of(a), W = curve_of(b);
    auto c = liaison::connect_minimal(V, W, seed);
    Json steps = Json::array();
    bool zero = true;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      steps.push_back(step_json(c.steps[i]));
      if (c.steps[i].height != 0) zero = false;
      r.check("step_" + std::to_string(i) + "_verified", c.steps[i].verified());
    }
    r.outputs["twists"] = c.twists;
    r.outputs["steps"] = steps;
    r.check("heights_zero", zero);
  });
}

Report cmd_selftest(const std::string& level, std::uint64_t seed) {
  Json in = Json::array();
  return guarded("selftest", seed, in, [&](Report& r) {
    if (level != "quick" && level != "full") throw Error(Errc::InvalidArgument, "level must be quick or full");
    r.outputs["level"] = level;
    Json suites = Json::array();
    for (auto& s : run_suites(level, seed)) {
      Json j{{"criterion", s.criterion}, {"title", s.title}, {"ok", s.ok()}, {"assertions", s.assertions.size()}};
      j["outputs"] = s.outputs;
      suites.push_back(std::move(j));
      for (auto& a : s.assertions) r.check("c" + std::to_string(s.criterion) + "." + a.name, a.ok, a.details);
    }
    r.outputs["suites"] = suites;
  });
}

}  // namespace bil::cli
