#include <random>

#include "bil/kernels/dense.hpp"
#include "bil/kernels/minors.hpp"
#include "bil/ring/ring_context.hpp"
#include "doctest.h"
#include "bil/oracle.hpp"

using namespace bil::kernels;
using bil::ring::RingContext;

namespace {

DenseMatrix random_matrix(std::size_t r, std::size_t c, const Field& F, std::mt19937_64& rng, int zero_pct = 30) {
  DenseMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (static_cast<int>(rng() % 100) >= zero_pct) m(i, j) = static_cast<Scalar>(rng() % F.characteristic());
  return m;
}

}  // namespace

TEST_CASE("rref serial and parallel agree") {
  Field F(32003);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    auto m = random_matrix(5 + rng() % 40, 5 + rng() % 40, F, rng);
    DenseMatrix a = m, b = m;
    auto pa = rref(a, F, Exec::serial);
    auto pb = rref(b, F, Exec::parallel);
    CHECK(pa == pb);
    CHECK(a == b);
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i), m.row(i) + m.cols());
    CHECK(static_cast<int>(pa.size()) == oracle::rank(rows, 32003));
  }
}

TEST_CASE("nullspace, determinant and solve") {
  Field F(32003);
  std::mt19937_64 rng(6);
  for (int it = 0; it < 20; ++it) {
    auto m = random_matrix(3 + rng() % 10, 3 + rng() % 10, F, rng, 50);
    auto N = nullspace(m, F);
    CHECK(multiply(m, N, F).is_zero());
    CHECK(N.cols() + rank(m, F) == m.cols());
    std::vector<Scalar> x0(m.cols());
    for (auto& v : x0) v = static_cast<Scalar>(rng() % 32003);
    DenseMatrix xv(m.cols(), 1);
    for (std::size_t i = 0; i < m.cols(); ++i) xv(i, 0) = x0[i];
    auto b = multiply(m, xv, F);
    std::vector<Scalar> bb(m.rows()), x;
    for (std::size_t i = 0; i < m.rows(); ++i) bb[i] = b(i, 0);
    REQUIRE(solve(m, bb, x, F));
    DenseMatrix xs(m.cols(), 1);
    for (std::size_t i = 0; i < m.cols(); ++i) xs(i, 0) = x[i];
    CHECK(multiply(m, xs, F) == b);
  }
  DenseMatrix d(2, 2);
  d(0, 0) = 1;
  d(0, 1) = 2;
  d(1, 0) = 3;
  d(1, 1) = 4;
  CHECK(determinant(d, F) == F.from_int(-2));
}

TEST_CASE("minors serial and parallel agree") {
  auto R = RingContext::p3();
  const auto& F = R->field();
  std::mt19937_64 rng(9);
  for (int it = 0; it < 10; ++it) {
    int rows = 2 + static_cast<int>(rng() % 3), cols = 2 + static_cast<int>(rng() % 5);
    PolyMatrix m(rows, std::vector<Polynomial>(cols));
    for (auto& r : m)
      for (auto& e : r)
        if (rng() % 3) e = R->random_form(1, rng);
    for (int k = 1; k <= std::min(rows, cols); ++k) {
      auto a = minors(m, k, F, Exec::serial);
      auto b = minors(m, k, F, Exec::parallel);
      CHECK(a == b);
    }
  }
  // diagonal matrix: the only 2x2 minor is the product
  PolyMatrix diag{{R->var(0), Polynomial()}, {Polynomial(), R->var(1)}};
  auto mm = minors(diag, 2, F);
  REQUIRE(mm.size() == 1);
  CHECK(mm[0] == mul(R->var(0), R->var(1), F));
  CHECK(minors(diag, 0, F).size() == 1);
}
