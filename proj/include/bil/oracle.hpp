#pragma once

// Brute-force linear algebra over monomial bases, written without the engine.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bil/modgb/free_module.hpp"

namespace oracle {

using bil::modgb::FreeModule;
using bil::modgb::Vec;

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline int rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  int r = 0;
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = powmod(m[r][c], p - 2, p);
    for (auto& x : m[r]) x = x * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      std::uint64_t f = m[i][c];
      for (int k = 0; k < cols; ++k) m[i][k] = (m[i][k] + (p - f) * m[r][k]) % p;
    }
    ++r;
  }
  return r;
}

/// Coordinates of vectors over the set of (component, monomial) keys they use.
class Coords {
 public:
  int index(int comp, std::uint64_t packed) {
    auto key = std::make_pair(comp, packed);
    auto it = idx_.find(key);
    if (it != idx_.end()) return it->second;
    int k = static_cast<int>(idx_.size());
    idx_.emplace(key, k);
    return k;
  }
  std::vector<std::vector<std::uint64_t>> rows(const std::vector<Vec>& vs) {
    std::vector<std::vector<std::pair<int, std::uint64_t>>> sparse;
    for (const auto& v : vs) {
      std::vector<std::pair<int, std::uint64_t>> s;
      for (const auto& t : v.terms()) s.push_back({index(t.comp, t.mono.packed()), t.coef});
      sparse.push_back(std::move(s));
    }
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& s : sparse) {
      std::vector<std::uint64_t> row(idx_.size(), 0);
      for (auto [k, c] : s) row[k] = c;
      out.push_back(std::move(row));
    }
    for (auto& r : out) r.resize(idx_.size(), 0);
    return out;
  }

 private:
  std::map<std::pair<int, std::uint64_t>, int> idx_;
};

/// Rank of a list of vectors.
inline int span_dim(const std::vector<Vec>& vs, std::uint64_t p) {
  Coords c;
  return rank(c.rows(vs), p);
}

/// All monomial multiples of gens landing in degree d (generator degrees taken from F).
inline std::vector<Vec> multiples_in_degree(const std::vector<Vec>& gens, const FreeModule& F, int d,
                                            const bil::ring::RingContext& R) {
  std::vector<Vec> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int gd = g.leading().mono.degree() + F.degree(g.leading().comp);
    if (gd > d) continue;
    for (const auto& m : R.monomials_of_degree(d - gd)) out.push_back(bil::modgb::mul_term(g, m, 1, R.field()));
  }
  return out;
}

}  // namespace oracle
