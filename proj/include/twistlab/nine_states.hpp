#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "twistlab/check_result.hpp"
#include "twistlab/expr.hpp"
#include "twistlab/twist.hpp"

namespace twistlab {

/// Coproduct patterns for the two-row Heisenberg block. With σ_i = σ_{i,N+1-i}:
///   P0(L)   = L⊗1 + 1⊗L
///   P_i±(L) = L⊗e^{±σ_i/2} + 1⊗L
///   R_i(L)  = L⊗e^{σ_i/2} + e^{σ_i}⊗L
///   T_i(L)  = L⊗e^{σ_i} + 1⊗L
///   T^{ab}(L) = L⊗e^{(a σ_1 + b σ_2)/2} + 1⊗L,  a, b = ±1
///   T_{R_i}(L) = L⊗e^{(σ_1+σ_2)/2} + e^{σ_i}⊗L
/// and the L-independent corrections
///   S2- = -E_{2r}⊗E_{1,N-1}e^{-σ_2/2}        S2+ = E_{2N}⊗E_{r,N-1}e^{(σ_1-σ_2)/2}
///   S1- = -E_{1r}⊗E_{2N}e^{-σ_1/2}           S1+ = E_{1,N-1}⊗E_{rN}e^{(σ_2-σ_1)/2}
struct Combinator {
    enum class Kind { P0, Pplus, Pminus, R, T, Tpp, Tmp, Tpm, TR, S2minus, S2plus, S1minus, S1plus };

    Kind kind = Kind::P0;
    int i = 0;  // 1 or 2 for the indexed kinds

    [[nodiscard]] bool is_correction() const;
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const Combinator&, const Combinator&) = default;
};

/// Symbolic element of U⊗U as a list of u⊗w summands.
using TensorExpr = std::vector<TwistTerm>;

[[nodiscard]] SparseMatrix tensor_eval(const TensorExpr& t, const Morphism& phi);

/// Expansion of a combinator applied to L (ignored by the S kinds) with the row parameter r.
[[nodiscard]] TensorExpr combinator_tensor(const Combinator& c, const Expr& L, int N, int r);

[[nodiscard]] SparseMatrix combinator_eval(const Combinator& c, const Expr& L, int N, int r, const Morphism& phi);
[[nodiscard]] SparseMatrix combinator_eval(const Combinator& c, const Expr& L, int N, int r = 3);

/// A table cell: signed sum of combinators.
struct CombinatorTerm {
    int coeff = 1;  // ±1
    Combinator c;
};
using TableEntry = std::vector<CombinatorTerm>;

[[nodiscard]] std::string entry_to_string(const TableEntry& e);
[[nodiscard]] TensorExpr entry_tensor(const TableEntry& e, const Expr& L, int N, int r);

enum class StateId {
    J1J0,
    Et0J1J0,
    Et1J1J0,
    E0J1J0,
    Et0E0J1J0,
    E1E0Et1J1J0,
    E1J1J0,
    E1E0Et0J1J0,
    E1Et1J1J0,
};

inline constexpr std::array<StateId, 9> kAllStates = {
    StateId::J1J0,   StateId::Et0J1J0,     StateId::Et1J1J0,     StateId::E0J1J0,    StateId::Et0E0J1J0,
    StateId::E1E0Et1J1J0, StateId::E1J1J0, StateId::E1E0Et0J1J0, StateId::E1Et1J1J0,
};

/// "J1J0", "~E0J1J0", ... ('~' marks an external factor).
[[nodiscard]] std::string state_name(StateId s);
/// Accepts the names above; "Ẽ" is accepted for "~E". Throws UnknownState.
[[nodiscard]] StateId parse_state(std::string_view name);

/// The eight generators E_1r, E_2r, E_1,N-1, E_1N, E_2,N-1, E_2N, E_r,N-1, E_rN.
[[nodiscard]] std::vector<Root> heisenberg_generators(int N, int r);

struct CostructureTable {
    StateId state;
    int N = 0;
    int r = 0;
    std::vector<Root> generators;
    std::vector<TableEntry> entries;  // parallel to generators
    TwistSequence twist_recipe;

    [[nodiscard]] const TableEntry& entry_for(const Root& g) const;
};

/// Factors used by the recipes.
[[nodiscard]] TwistFactor state_factor(int N, int r, std::string_view label);

[[nodiscard]] CostructureTable costructure_table(StateId state, int N, int r);
[[nodiscard]] CostructureTable costructure_table(std::string_view state, int N, int r);

/// 2-Jordanian costructure of the full block H(2, N-4): generator and claimed entry.
struct BlockEntry {
    Root generator;
    TableEntry entry;
};
[[nodiscard]] std::vector<BlockEntry> two_jordanian_block(int N);

/// Twisted coproduct of every generator under the recipe equals the table, exactly.
/// Mismatching cells are diagnosed in the result detail (including S-sign flips).
[[nodiscard]] CheckResult verify_state(StateId state, int N, int r, const Morphism& phi);
[[nodiscard]] CheckResult verify_state(StateId state, int N, int r);

/// Every entry of the 2-Jordanian block table.
[[nodiscard]] CheckResult verify_two_jordanian(int N, const Morphism& phi);

struct DiagramEdge {
    StateId from;
    StateId to;
    std::string factor;  // "E0", "E1", "~E0", "~E1"
};

[[nodiscard]] std::vector<DiagramEdge> diagram_edges();

/// Edges reproduce target tables; both squares commute; Φ_{E_i} and the
/// external factor ~E_j commute exactly when i = j.
[[nodiscard]] CheckResult verify_diagram(int N, int r, const Morphism& phi);
[[nodiscard]] CheckResult verify_diagram(int N, int r);

/// After J0 and the full extension E0, the nested gl(N-2) block is primitive
/// while E_12, outside it, stays deformed.
[[nodiscard]] CheckResult verify_matreshka(int N, const Morphism& phi);
[[nodiscard]] CheckResult verify_matreshka(int N);

/// Extensions E_{i-1}(r) leave generators with another row index untouched.
[[nodiscard]] CheckResult verify_locality(int N, int r, const Morphism& phi);

/// Extended twist with generic α on the carrier (H, A, B, E):
///   Δ(H) = H⊗e^{-σ} + 1⊗H - A⊗B e^{-(β+1)σ},  Δ(A) = A⊗e^{-βσ} + 1⊗A,
///   Δ(B) = B⊗e^{βσ} + e^{σ}⊗B,               Δ(E) = E⊗e^{σ} + 1⊗E.
[[nodiscard]] CheckResult verify_extended_costructure(int N, int r, const Rational& alpha, const Morphism& phi);

/// Before/after coproduct patterns: Φ_J and Φ_E on the canonical carrier,
/// the generic (α, β) transition, the three internal states, the external states.
[[nodiscard]] CheckResult verify_transition_schemes(int N, const std::vector<Rational>& alphas, const Morphism& phi);
[[nodiscard]] CheckResult verify_transition_schemes(int N);

}  // namespace twistlab
