#pragma once

#include <cstddef>
#include <span>

#include "twistlab/sparse_matrix.hpp"

namespace twistlab {

/// Kronecker product a ⊗ b.
[[nodiscard]] SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// I ⊗ ... ⊗ m ⊗ ... ⊗ I with m in slot `leg` (1-based) of `legs` slots.
[[nodiscard]] SparseMatrix embed_leg(const SparseMatrix& m, int leg, int legs);

/// Conjugates m, acting on `legs` tensor slots of dimension `leg_dim`, by the
/// slot permutation sending old slot k to new slot dest[k] (0-based).
[[nodiscard]] SparseMatrix permute_legs(const SparseMatrix& m, std::size_t leg_dim,
                                        std::span<const int> dest);

/// P m P for the flip P(x ⊗ y) = y ⊗ x on two equal legs.
[[nodiscard]] SparseMatrix swap_legs(const SparseMatrix& m, std::size_t leg_dim);

}  // namespace twistlab
