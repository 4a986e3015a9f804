#pragma once

#include <vector>

#include "bil/kernels/dense.hpp"
#include "bil/ring/polynomial.hpp"

namespace bil::kernels {

using ring::Polynomial;

/// Matrix of polynomials, rows[i][j].
using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// All nonzero k x k minors, ordered by (row subset, column subset) in
/// lexicographic order. The parallel variant distributes row subsets over
/// threads and returns the same sequence.
std::vector<Polynomial> minors(const PolyMatrix& m, int k, const Field& F, Exec exec = Exec::serial);

}  // namespace bil::kernels
