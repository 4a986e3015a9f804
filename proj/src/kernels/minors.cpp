#include "bil/kernels/minors.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "bil/error.hpp"

namespace bil::kernels {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n || k < 0) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// Determinants of rows[0..k) against every k-subset of columns, by Laplace
// expansion along the last row with memoization over column masks.
std::vector<Polynomial> minors_for_rows(const PolyMatrix& m, const std::vector<int>& rows,
                                        const std::vector<std::vector<int>>& col_sets, const Field& F) {
  const int ncols = static_cast<int>(m.front().size());
  const int k = static_cast<int>(rows.size());
  std::unordered_map<std::uint64_t, Polynomial> prev, cur;
  prev.emplace(0, Polynomial::constant(1));
  for (int j = 1; j <= k; ++j) {
    cur.clear();
    const auto& row = m[rows[j - 1]];
    for (const auto& [mask, sub] : prev) {
      if (sub.is_zero()) continue;
      for (int c = 0; c < ncols; ++c) {
        if (mask & (1ULL << c)) continue;
        if (row[c].is_zero()) continue;
        std::uint64_t nm = mask | (1ULL << c);
        // position of c inside the new column set
        int pos = std::popcount(nm & ((1ULL << c) - 1));
        bool negative = ((j - 1) + pos) % 2 == 1;
        Polynomial term = mul(row[c], sub, F);
        if (negative) term = neg(term, F);
        auto it = cur.find(nm);
        if (it == cur.end())
          cur.emplace(nm, std::move(term));
        else
          it->second = add(it->second, term, F);
      }
    }
    std::swap(prev, cur);
  }
  std::vector<Polynomial> out;
  for (const auto& cs : col_sets) {
    std::uint64_t mask = 0;
    for (int c : cs) mask |= 1ULL << c;
    auto it = prev.find(mask);
    if (it != prev.end() && !it->second.is_zero()) out.push_back(it->second);
  }
  return out;
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, int k, const Field& F, Exec exec) {
  if (k <= 0) return {Polynomial::constant(1)};
  if (m.empty() || static_cast<int>(m.size()) < k) return {};
  const int ncols = static_cast<int>(m.front().size());
  if (ncols > 63) throw Error(Errc::InvalidArgument, "minors: too many columns");
  if (ncols < k) return {};
  auto row_sets = combinations(static_cast<int>(m.size()), k);
  auto col_sets = combinations(ncols, k);
  std::vector<std::vector<Polynomial>> per_rows(row_sets.size());
  const long long n = static_cast<long long>(row_sets.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) per_rows[i] = minors_for_rows(m, row_sets[i], col_sets, F);
  } else {
    for (long long i = 0; i < n; ++i) per_rows[i] = minors_for_rows(m, row_sets[i], col_sets, F);
  }
  std::vector<Polynomial> out;
  for (auto& v : per_rows)
    for (auto& p : v) out.push_back(std::move(p));
  return out;
}

}  // namespace bil::kernels
