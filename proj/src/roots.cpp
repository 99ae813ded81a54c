#include "twistlab/roots.hpp"

#include "twistlab/errors.hpp"

namespace twistlab {

std::string Root::to_string() const { return "e" + std::to_string(i) + "-e" + std::to_string(j); }

Expr cartan_element(int N, int i, int k) {
    if (i < 1 || k < 1 || i > N || k > N || i == k)
        throw IndexOutOfRange("H_" + std::to_string(i) + "," + std::to_string(k) + " for N=" + std::to_string(N));
    return Expr::sum({Rational(1, 2) * Expr::gen(i, i), Rational(-1, 2) * Expr::gen(k, k)});
}

Root initial_root(int N, int k) {
    if (k < 0 || N - 2 * k < 2)
        throw IndexOutOfRange("chain step " + std::to_string(k) + " does not fit in N=" + std::to_string(N));
    return Root{k + 1, N - k};
}

ConstituentRoots constituent_roots(int N, int k) {
    const Root lambda0 = initial_root(N, k);
    ConstituentRoots out;
    for (int s = lambda0.i + 1; s < lambda0.j; ++s) {
        out.prime.push_back(Root{lambda0.i, s});
        out.doubleprime.push_back(Root{s, lambda0.j});
    }
    return out;
}

int maximal_chain_length(int N) { return (N - 2) / 2; }

ChainPlan chain_plan(int N, int p) {
    if (p < 0 || N - 2 * p < 2)
        throw IndexOutOfRange("chain of length " + std::to_string(p) + " does not fit in N=" + std::to_string(N));
    ChainPlan plan{N, {}, p == maximal_chain_length(N)};
    for (int k = 0; k <= p; ++k) {
        auto pi = constituent_roots(N, k);
        plan.steps.push_back(ChainStep{initial_root(N, k), std::move(pi.prime), std::move(pi.doubleprime)});
    }
    return plan;
}

Carrier carrier_embedding(int N, int r, const Rational& alpha) {
    if (N < 3 || r <= 1 || r >= N)
        throw IndexOutOfRange("carrier needs 1 < r < N, got r=" + std::to_string(r) + " N=" + std::to_string(N));
    Rational beta = Rational(1) - alpha;
    Expr H = Expr::sum({alpha * Expr::gen(1, 1), (-beta) * Expr::gen(N, N)});
    return Carrier{alpha, beta, H, Expr::gen(1, r), Expr::gen(r, N), Expr::gen(1, N)};
}

}  // namespace twistlab
