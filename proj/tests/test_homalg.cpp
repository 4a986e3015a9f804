#include <random>

#include "bil/error.hpp"
#include "bil/homalg/homalg.hpp"
#include "bil/ring/parse.hpp"
#include "doctest.h"
#include "bil/oracle.hpp"

using namespace bil::homalg;
using bil::modgb::make_hypersurface;
using bil::ring::parse_polynomial;
using bil::ring::RingContext;

namespace {

RingPtr P3() { return RingContext::p3(); }

Ideal ideal_of(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (auto g : gens) v.push_back(parse_polynomial(g, *R));
  return Ideal::ideal(R, v);
}

Polynomial P(const RingPtr& R, const char* s) { return parse_polynomial(s, *R); }

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim (S/I)_d by spanning all multiples of the generators
std::int64_t brute_hf(const Ideal& I, int d) {
  const auto& R = *I.ring();
  auto mult = oracle::multiples_in_degree(I.generators(), I.ambient(), d, R);
  return binom(d + 3, 3) - oracle::span_dim(mult, R.field().characteristic());
}

Ideal line() { return ideal_of(P3(), {"x0", "x1"}); }

}  // namespace

TEST_CASE("resolution of a line") {
  auto I = line();
  auto res = minimal_free_resolution(ModulePresentation::of_submodule(I));
  REQUIRE(res.length() == 1);
  CHECK(res.free(0).degrees() == std::vector<int>{1, 1});
  CHECK(res.free(1).degrees() == std::vector<int>{2});
  auto b = betti_table(res);
  CHECK(b.at(0, 1) == 2);
  CHECK(b.at(1, 2) == 1);
  CHECK(b.total(0) == 2);
  CHECK(is_complex(res));

  auto q = minimal_free_resolution(ModulePresentation::quotient(I));
  CHECK(q.length() == 2);
  CHECK(betti_table(q).to_string() == "b0,0=1 b1,1=2 b2,2=1");
}

TEST_CASE("betti tables of skew lines and the twisted cubic") {
  auto R = P3();
  auto skew = ideal_of(R, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"});
  auto rs = minimal_free_resolution(ModulePresentation::of_submodule(skew));
  auto b = betti_table(rs);
  CHECK(b.at(0, 2) == 4);
  CHECK(b.at(1, 3) == 4);
  CHECK(b.at(2, 4) == 1);
  CHECK(b.b.size() == 3);

  auto tc = ideal_of(R, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  auto bt = betti_table(minimal_free_resolution(ModulePresentation::of_submodule(tc)));
  CHECK(bt.at(0, 2) == 3);
  CHECK(bt.at(1, 3) == 2);
  CHECK(bt.b.size() == 2);

  auto m = ideal_of(R, {"x0", "x1", "x2", "x3"});
  auto bk = betti_table(minimal_free_resolution(ModulePresentation::quotient(m)));
  for (int i = 0; i <= 4; ++i) CHECK(bk.at(i, i) == binom(4, i));
}

TEST_CASE("euler characteristic on random ideals") {
  auto R = P3();
  std::mt19937_64 rng(11);
  const auto& fld = R->field();
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Polynomial> g;
    int ng = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < ng; ++i) {
      int d = 1 + static_cast<int>(rng() % 3);
      auto mons = R->monomials_of_degree(d);
      std::vector<bil::ring::PTerm> t;
      for (int j = 0; j < 3; ++j) t.push_back({mons[rng() % mons.size()], bil::ring::random_nonzero_scalar(fld, rng)});
      Polynomial f(std::move(t), fld);
      if (!f.is_zero()) g.push_back(f);
    }
    auto I = Ideal::ideal(R, g);
    auto M = ModulePresentation::quotient(I);
    auto res = minimal_free_resolution(M);
    CHECK(res.length() <= 4);
    CHECK(res.is_minimal());
    CHECK(is_complex(res));
    CHECK(euler_characteristic_holds(res, 0, 7));
    for (int d = 0; d <= 5; ++d) CHECK(hilbert_function(M, d) == brute_hf(I, d));
  }
}

TEST_CASE("hilbert polynomials") {
  auto R = P3();
  auto hp = [&](std::initializer_list<const char*> g) {
    return hilbert_polynomial(ModulePresentation::quotient(ideal_of(R, g)));
  };
  auto l = hp({"x0", "x1"});
  CHECK(l.to_string() == "n + 1");
  CHECK(hp({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}).to_string() == "3*n + 1");
  CHECK(hp({"x0*x2", "x0*x3", "x1*x2", "x1*x3"}).to_string() == "2*n + 2");
  auto ci = hp({"x0^2 + x1*x2", "x3^3 - x0*x1*x2"});
  CHECK(ci.to_string() == "6*n - 3");
  auto plane = hp({"x0"});
  CHECK(plane.to_string() == "1/2*n^2 + 3/2*n + 1");
  for (int n = 0; n < 6; ++n) CHECK(plane(n) == binom(n + 2, 2));
  CHECK(hp({"x0", "x1", "x2", "x3"}).to_string() == "0");
  auto pts = hp({"x0", "x1", "x2*x3"});
  CHECK(pts(10) == 2);
}

TEST_CASE("hom modules") {
  auto R = P3();
  auto A = ModulePresentation::quotient(ideal_of(R, {"x0"}));
  auto B = ModulePresentation::quotient(line());
  auto h = hom_presentation(A, B);
  for (int d = 0; d < 5; ++d) CHECK(hilbert_function(h.sq.pres, d) == hilbert_function(B, d));
  CHECK(hom_presentation(B, A).sq.pres.is_zero());

  // Hom(I, S) = S for a height two ideal
  auto I = ModulePresentation::of_submodule(line());
  auto S = ModulePresentation::free(FreeModule(R, {0}));
  auto hs = hom_presentation(I, S);
  for (int d = -1; d < 4; ++d) CHECK(hilbert_function(hs.sq.pres, d) == binom(d + 3, 3));
  REQUIRE(hs.sq.elements.size() == 1);
  auto phi = hs.as_matrix(hs.sq.elements[0]);
  CHECK(phi.rows() == 1);
  CHECK(phi.cols() == 2);

  // Hom(S, M) = M
  auto hm = hom_presentation(S, B);
  for (int d = 0; d < 5; ++d) CHECK(hilbert_function(hm.sq.pres, d) == hilbert_function(B, d));
}

TEST_CASE("ext modules") {
  auto R = P3();
  auto k = ModulePresentation::quotient(ideal_of(R, {"x0", "x1", "x2", "x3"}));
  for (int i = 0; i < 4; ++i) CHECK(ext_module(k, i).is_zero());
  auto e4 = ext_module(k, 4);
  CHECK(!e4.is_zero());
  CHECK(hilbert_function(e4.pres, -4) == 1);
  for (int d = -8; d < 3; ++d)
    if (d != -4) CHECK(hilbert_function(e4.pres, d) == 0);

  auto I = ModulePresentation::of_submodule(line());
  CHECK(ext_vanishes(I, 2));
  auto e1 = ext_module(I, 1);
  CHECK(!e1.is_zero());
  // Ext^1(I, S) = (S/I)(2)
  for (int d = -3; d < 4; ++d) CHECK(hilbert_function(e1.pres, d) == (d >= -2 ? d + 3 : 0));
  auto e0 = ext_module(I, 0);
  for (int d = -2; d < 3; ++d) CHECK(hilbert_function(e0.pres, d) == binom(d + 3, 3));

  // twist shifts degrees
  auto e4t = ext_module(k, 4, -4);
  CHECK(hilbert_function(e4t.pres, 0) == 1);
}

TEST_CASE("resolutions over a quadric") {
  auto S = P3();
  auto R = make_hypersurface(32003, 4, P(S, "x0*x3 - x1*x2"));
  auto I = ideal_of(R, {"x0", "x1"});
  auto M = ModulePresentation::quotient(I);
  CHECK_THROWS_AS(minimal_free_resolution(M, 5), bil::Error);
  auto part = partial_resolution(M, 5);
  CHECK(part.length() == 5);
  CHECK(is_complex(part));
  auto b = betti_table(part);
  CHECK(b.at(0, 0) == 1);
  for (int i = 1; i <= 5; ++i) CHECK(b.total(i) == 2);
  auto conic = ModulePresentation::quotient(ideal_of(R, {"x0"}));
  CHECK(minimal_free_resolution(conic, 3).length() == 1);
}

TEST_CASE("finite length modules and graded duals") {
  auto R = P3();
  auto m2 = ModulePresentation::quotient(ideal_of(R, {"x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2", "x1*x2", "x1*x3",
                                                       "x2^2", "x2*x3", "x3^2"}));
  auto M = FiniteLengthModule::from_presentation(m2);
  CHECK(M.dims() == std::map<int, int>{{0, 1}, {1, 4}});
  CHECK(M.total_dim() == 5);
  for (int v = 0; v < 4; ++v) {
    auto A = M.action(v, 0);
    CHECK(A.rows() == 4);
    CHECK(bil::kernels::rank(A, R->field()) == 1);
  }
  auto D = graded_dual(M);
  CHECK(D.dims() == std::map<int, int>{{-1, 4}, {0, 1}});
  // the dual is generated by the four degree -1 vectors
  CHECK(D.presentation().cover().rank() == 4);
  for (int d = -2; d < 2; ++d) CHECK(hilbert_function(D.presentation(), d) == D.dim(d));
  auto DD = graded_dual(D);
  CHECK(DD.dims() == M.dims());
  for (int v = 0; v < 4; ++v) CHECK(DD.action(v, 0) == M.action(v, 0));

  auto again = FiniteLengthModule::from_presentation(D.presentation());
  CHECK(again.dims() == D.dims());

  auto s = M.shifted(2);
  CHECK(s.dims() == std::map<int, int>{{-2, 1}, {-1, 4}});
  CHECK(hilbert_function(s.presentation(), -1) == 4);

  CHECK_THROWS_AS(FiniteLengthModule::from_presentation(ModulePresentation::quotient(line())), bil::Error);
  CHECK(FiniteLengthModule::zero(R).is_zero());
}

TEST_CASE("yoneda extensions") {
  auto R = P3();
  auto A = ModulePresentation::quotient(ideal_of(R, {"x0"}));
  FreeModule L(R, {0});
  const auto& F1 = A.relations().source();

  auto split = yoneda_extension(A, L, GradedMatrix(L, F1));
  auto fs = bil::modgb::fitting_ideal(split.E, 1);
  CHECK(fs.equals(ideal_of(R, {"x0"})));

  auto xi = GradedMatrix(L, F1, {Vec::from_polynomial(P(R, "x1"), 0)});
  auto ext = yoneda_extension(A, L, xi);
  CHECK(bil::modgb::fitting_ideal(ext.E, 1).equals(ideal_of(R, {"x0", "x1"})));
  for (int d = 0; d < 5; ++d)
    CHECK(hilbert_function(ext.E, d) == binom(d + 3, 3) + hilbert_function(A, d));
  auto back = connecting_cocycle(ext, A);
  CHECK(back.column(0) == xi.column(0));

  auto B = ModulePresentation::quotient(line());
  const auto& G1 = B.relations().source();
  auto bad = GradedMatrix(L, G1, {Vec::from_polynomial(P(R, "x2"), 0), Vec()});
  CHECK_THROWS_AS(yoneda_extension(B, L, bad), bil::Error);
  auto good = GradedMatrix(L, G1, {Vec::from_polynomial(P(R, "x0"), 0), Vec::from_polynomial(P(R, "x1"), 0)});
  auto eg = yoneda_extension(B, L, good);
  CHECK(connecting_cocycle(eg, B).columns() == good.columns());
}
