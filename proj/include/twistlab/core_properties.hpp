#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twistlab/check_result.hpp"
#include "twistlab/sparse_matrix.hpp"

namespace twistlab {

/// Random strictly upper-triangular matrix with small rational entries.
[[nodiscard]] SparseMatrix random_nilpotent(std::mt19937_64& rng, std::size_t dim, double density = 0.5);

/// Random matrix with small rational entries, no structure.
[[nodiscard]] SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t dim, double density = 0.5);

/// Randomized exact-core laws, `cases` inputs each:
///   kron(A,B) kron(C,D) = kron(AC, BD)
///   exp(log1p(m)) = 1 + m
///   pow1p[q](m) pow1p[-q](m) = 1
///   exp(m + n) = exp(m) exp(n) for n a polynomial in m
/// One CheckResult per law; the detail records the case count.
[[nodiscard]] std::vector<CheckResult> core_property_checks(std::uint64_t seed, int cases);

}  // namespace twistlab
