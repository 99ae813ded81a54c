#pragma once

#include <optional>
#include <vector>

#include "twistlab/check_result.hpp"
#include "twistlab/expr.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

/// F12 (Δ_B ⊗ id)(F) = F23 (id ⊗ Δ_B)(F) in End(V⊗V⊗V), where Δ_B is the
/// coproduct already twisted by `base` (undeformed when base is empty).
[[nodiscard]] CheckResult cocycle_check(const TwistSequence& F, const TwistSequence& base, const Morphism& phi);
[[nodiscard]] CheckResult cocycle_check(const TwistSequence& F, const TwistSequence& base = {});

/// Chain checked one step at a time: each group of factors against the
/// coproduct twisted by all earlier groups. `groups` holds factor counts.
[[nodiscard]] CheckResult stepwise_cocycle_check(const TwistSequence& F, const std::vector<std::size_t>& groups,
                                                 const Morphism& phi);

/// Step sizes (J_k plus its extensions) of chain_twist(N, p).
[[nodiscard]] std::vector<std::size_t> chain_step_sizes(int N, int p);

/// (ε⊗id)F = (id⊗ε)F = 1, leg counits taken symbolically.
[[nodiscard]] CheckResult counit_check(const TwistSequence& F);

/// F Δ(x) F^-1 in End(V⊗V).
[[nodiscard]] SparseMatrix twisted_coproduct(const TwistSequence& F, const Expr& x, const Morphism& phi);
[[nodiscard]] SparseMatrix twisted_coproduct(const MaterializedTwist& F, const Expr& x, const Morphism& phi);
[[nodiscard]] SparseMatrix twisted_coproduct(const TwistSequence& F, const Expr& x);

/// R = F21 F^-1: quantum Yang-Baxter equation and R21 R = 1.
[[nodiscard]] CheckResult r_matrix_checks(const TwistSequence& F, const Morphism& phi);
[[nodiscard]] CheckResult r_matrix_checks(const TwistSequence& F);

/// v = sum f1 S(f2) of the materialized twist.
[[nodiscard]] SparseMatrix antipode_twist_element(const TwistSequence& F, const Morphism& phi,
                                                  unsigned max_degree);

/// Antipode axiom of the twisted Hopf algebra, S_F(a) = v S(a) v^-1:
/// m(S_F⊗id)Δ_F(x) = ε(x) = m(id⊗S_F)Δ_F(x) for each x in `generators` and the unit.
/// Expansion of every factor is capped at `max_degree` (default 2N).
[[nodiscard]] CheckResult antipode_checks(const TwistSequence& F, const std::vector<Expr>& generators,
                                          const Morphism& phi, std::optional<unsigned> max_degree = {});

/// (Δ_F⊗id)Δ_F(x) = (id⊗Δ_F)Δ_F(x) for each generator.
[[nodiscard]] CheckResult coassociativity_check(const TwistSequence& F, const std::vector<Expr>& generators,
                                                const Morphism& phi);

/// Δ_F(xy) = Δ_F(x) Δ_F(y).
[[nodiscard]] CheckResult multiplicativity_check(const TwistSequence& F, const Expr& x, const Expr& y,
                                                 const Morphism& phi);

/// J1 E0(2) E0(N-1) J1^-1 equals the external factor ~E0, and the mirrored
/// J0 E'1(1) E'1(N) J0^-1 = ~E1.
[[nodiscard]] CheckResult verify_dragging(int N, const Morphism& phi);
[[nodiscard]] CheckResult verify_dragging(int N);

/// Materialized E1(r) commutes with J1, with every E0(s), s = 2..N-1, and
/// with the other E1(s). Without a morphism both the fundamental and the
/// doubled representation are tried; the fundamental one alone is too small
/// to see the [E1(r),J1], [E1(r),E0(2)] and [E1(r),E0(N-1)] commutators.
[[nodiscard]] CheckResult verify_extension_commutation(int N, const Morphism& phi);
[[nodiscard]] CheckResult verify_extension_commutation(int N);

/// Exact inverse by Gauss-Jordan elimination; small matrices only.
[[nodiscard]] SparseMatrix exact_inverse(const SparseMatrix& m);

}  // namespace twistlab
