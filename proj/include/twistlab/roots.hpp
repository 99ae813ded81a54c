#pragma once

#include <string>
#include <vector>

#include "twistlab/expr.hpp"

namespace twistlab {

/// The root e_i - e_j of gl(N), paired with the generator E_ij.
struct Root {
    int i = 0;
    int j = 0;

    [[nodiscard]] Expr generator() const { return Expr::gen(i, j); }
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const Root&, const Root&) = default;
};

/// H_ik = (E_ii - E_kk) / 2.
[[nodiscard]] Expr cartan_element(int N, int i, int k);

struct ConstituentRoots {
    std::vector<Root> prime;        // e_{k+1} - e_s
    std::vector<Root> doubleprime;  // e_s - e_{N-k}, paired by position
};

/// Initial root of chain step k (0-based): e_{k+1} - e_{N-k}.
[[nodiscard]] Root initial_root(int N, int k);

/// Constituent pairs of step k inside the nested sl(N - 2k) block.
[[nodiscard]] ConstituentRoots constituent_roots(int N, int k);

struct ChainStep {
    Root initial;
    std::vector<Root> prime;
    std::vector<Root> doubleprime;
};

struct ChainPlan {
    int N = 0;
    std::vector<ChainStep> steps;  // steps[k] for k = 0..p
    bool maximal = false;
};

[[nodiscard]] ChainPlan chain_plan(int N, int p);

/// Largest p with N - 2p >= 2.
[[nodiscard]] int maximal_chain_length(int N);

/// Four-dimensional carrier [H,E]=E, [H,A]=aA, [H,B]=bB, [A,B]=E, a+b=1,
/// realized as H = a E_11 - b E_NN, A = E_1r, B = E_rN, E = E_1N.
struct Carrier {
    Rational alpha;
    Rational beta;
    Expr H;
    Expr A;
    Expr B;
    Expr E;
};

[[nodiscard]] Carrier carrier_embedding(int N, int r, const Rational& alpha);

}  // namespace twistlab
