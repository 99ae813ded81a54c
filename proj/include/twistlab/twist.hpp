#pragma once

#include <string>
#include <vector>

#include "twistlab/expr.hpp"
#include "twistlab/roots.hpp"
#include "twistlab/sparse_matrix.hpp"

namespace twistlab {

/// One summand u ⊗ w of a twist exponent.
struct TwistTerm {
    Expr left;
    Expr right;
};

/// exp(sum_a left_a ⊗ right_a), kept symbolic.
struct TwistFactor {
    std::string name;
    std::vector<TwistTerm> terms;
    int N = 0;
};

/// Factors in application order: factors[0] acts first, so the twisting
/// element is factors[n-1] * ... * factors[0].
struct TwistSequence {
    int N = 0;
    std::vector<TwistFactor> factors;

    [[nodiscard]] TwistSequence then(TwistFactor f) const;
    [[nodiscard]] TwistSequence then(const TwistSequence& later) const;
    [[nodiscard]] std::string name() const;
};

[[nodiscard]] TwistSequence sequence_of(int N, std::vector<TwistFactor> factors);

/// exp(H_{k,N-k+1} ⊗ ln(1 + E_{k,N-k+1})), the Jordanian factor of chain step k-1.
[[nodiscard]] TwistFactor jordanian_factor(int N, int k);

/// exp(E_{k,r} ⊗ E_{r,N-k+1} (1 + E_{k,N-k+1})^(-beta)) for k < r < N-k+1.
[[nodiscard]] TwistFactor extension_factor(int N, int k, int r, const Rational& beta = Rational(1, 2));

/// exp(E_{i,s} ⊗ E_{s,j} (1 + E_{ij})^(-beta)) for the root e_i - e_j and any s outside {i, j}.
[[nodiscard]] TwistFactor extension_for_root(int N, const Root& initial, int s, const Rational& beta = Rational(1, 2));

/// Jordanian factor on the carrier H' = a E_11 - b E_NN followed by the extension
/// exp(E_1r ⊗ E_rN (1 + E_1N)^(-b)).
[[nodiscard]] TwistSequence extended_twist_generic(int N, int r, const Rational& alpha);

/// Full chain J0, E0(r)..., J1, E1(r)..., ..., Jp, Ep(r)... in application order.
[[nodiscard]] TwistSequence chain_twist(int N, int p);

/// Jordanian factors only, J0 ... Jp.
[[nodiscard]] TwistSequence multijordanian_twist(int N, int p);

enum class ExternalKind { E0tilde, E1tilde };

/// External factors obtained by dragging J1 (resp. J0) through the split-off
/// extension factors; defined for N >= 6.
[[nodiscard]] TwistFactor external_factor(int N, ExternalKind which);

/// Chain J1, E'1 (maximal set for e2 - e_{N-1}), J0, E'0 (r = 3..N-2).
[[nodiscard]] TwistSequence alternative_chain(int N);

/// Throws unless every left leg has zero counit.
void check_factor_counits(const TwistFactor& f);

/// sum_a phi_left(left_a) ⊗ phi_right(right_a).
[[nodiscard]] SparseMatrix factor_argument(const TwistFactor& f, const Morphism& left, const Morphism& right);

[[nodiscard]] SparseMatrix materialize_factor(const TwistFactor& f, const Morphism& left, const Morphism& right);
[[nodiscard]] SparseMatrix materialize_factor_inverse(const TwistFactor& f, const Morphism& left,
                                                      const Morphism& right);

struct MaterializedTwist {
    SparseMatrix forward;
    SparseMatrix inverse;
};

/// Product of the factor exponentials, later factors to the left. The
/// inverse is the reversed product of exp(-T) and never a matrix inversion.
[[nodiscard]] MaterializedTwist materialize(const TwistSequence& seq, const Morphism& left, const Morphism& right);

[[nodiscard]] MaterializedTwist materialize(const TwistSequence& seq, const Morphism& phi);

}  // namespace twistlab
