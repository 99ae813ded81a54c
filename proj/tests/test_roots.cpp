#include <gtest/gtest.h>

#include "test_util.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/roots.hpp"

using namespace twistlab;
using namespace twistlab::testing;

namespace {

const Rational half(1, 2);

// Pairs of positive roots of the nested block {k+1, ..., N-k} adding up to
// the initial root, found by scanning every pair of block roots.
ConstituentRoots brute_force_constituents(int N, int k) {
    const int lo = k + 1;
    const int hi = N - k;
    std::vector<Root> positive;
    for (int i = lo; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j) positive.push_back({i, j});
    ConstituentRoots out;
    for (const Root& a : positive)
        for (const Root& b : positive)
            if (a.i == lo && b.j == hi && a.j == b.i) {
                out.prime.push_back(a);
                out.doubleprime.push_back(b);
            }
    return out;
}

}  // namespace

TEST(Roots, CartanElement) {
    EXPECT_EQ(eval_expr(cartan_element(2, 1, 2), fundamental_morphism(2)), diag({half, -half}));
    EXPECT_EQ(eval_expr(cartan_element(6, 1, 6), fundamental_morphism(6)), half * (e(6, 1, 1) - e(6, 6, 6)));
    EXPECT_THROW((void)cartan_element(3, 2, 2), IndexOutOfRange);
    EXPECT_THROW((void)cartan_element(3, 1, 4), IndexOutOfRange);
}

TEST(Roots, ConstituentsN6) {
    const auto c = constituent_roots(6, 0);
    const std::vector<Root> prime{{1, 2}, {1, 3}, {1, 4}, {1, 5}};
    const std::vector<Root> dprime{{2, 6}, {3, 6}, {4, 6}, {5, 6}};
    EXPECT_EQ(c.prime, prime);
    EXPECT_EQ(c.doubleprime, dprime);
}

TEST(Roots, ConstituentsEmptyForSl2Step) {
    const auto c = constituent_roots(4, 1);
    EXPECT_TRUE(c.prime.empty());
    EXPECT_TRUE(c.doubleprime.empty());
}

TEST(Roots, ConstituentsN7Step1) {
    const std::vector<Root> expected{{2, 3}, {2, 4}, {2, 5}};
    EXPECT_EQ(constituent_roots(7, 1).prime, expected);
}

TEST(Roots, ConstituentsAgreeWithBruteForce) {
    for (int N = 2; N <= 10; ++N)
        for (int k = 0; N - 2 * k >= 2; ++k) {
            const auto got = constituent_roots(N, k);
            const auto want = brute_force_constituents(N, k);
            EXPECT_EQ(got.prime, want.prime) << "N=" << N << " k=" << k;
            EXPECT_EQ(got.doubleprime, want.doubleprime) << "N=" << N << " k=" << k;
        }
}

TEST(Roots, ChainPlan) {
    const auto plan = chain_plan(6, 1);
    ASSERT_EQ(plan.steps.size(), 2u);
    EXPECT_EQ(plan.steps[0].initial, (Root{1, 6}));
    EXPECT_EQ(plan.steps[1].initial, (Root{2, 5}));
    EXPECT_FALSE(plan.maximal);
    const auto small = chain_plan(4, 1);
    ASSERT_EQ(small.steps.size(), 2u);
    EXPECT_TRUE(small.steps[1].prime.empty());
    EXPECT_TRUE(small.maximal);
    EXPECT_THROW((void)chain_plan(5, 2), IndexOutOfRange);
    EXPECT_EQ(maximal_chain_length(8), 3);
    EXPECT_EQ(maximal_chain_length(7), 2);
    EXPECT_EQ(initial_root(8, 2), (Root{3, 6}));
}

TEST(Roots, CarrierRelations) {
    for (const Rational& alpha : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(2, 5)}) {
        for (int N : {3, 6}) {
            const int r = N == 3 ? 2 : 3;
            const auto c = carrier_embedding(N, r, alpha);
            const auto phi = fundamental_morphism(N);
            const auto H = eval_expr(c.H, phi);
            const auto A = eval_expr(c.A, phi);
            const auto B = eval_expr(c.B, phi);
            const auto E = eval_expr(c.E, phi);
            EXPECT_EQ(c.alpha + c.beta, Rational(1));
            EXPECT_EQ(commutator(H, E), E);
            EXPECT_EQ(commutator(H, A), alpha * A);
            EXPECT_EQ(commutator(H, B), c.beta * B);
            EXPECT_EQ(commutator(A, B), E);
            EXPECT_TRUE(commutator(A, E).is_zero());
            EXPECT_TRUE(commutator(B, E).is_zero());
        }
    }
    EXPECT_THROW((void)carrier_embedding(4, 4, Rational(1, 2)), IndexOutOfRange);
}
