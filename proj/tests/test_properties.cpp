#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "twistlab/analytic.hpp"
#include "twistlab/core_properties.hpp"
#include "twistlab/hopf_check.hpp"
#include "twistlab/tensor.hpp"

using namespace twistlab;
using namespace twistlab::testing;

namespace {

constexpr int kN = 3;
constexpr int kCases = 300;

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

Expr random_gen(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> idx(1, kN);
    return Expr::gen(idx(rng), idx(rng));
}

// Strictly upper-triangular generator: nilpotent in every representation used here.
Expr random_upper_gen(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> i(1, kN - 1);
    const int a = i(rng);
    return Expr::gen(a, std::uniform_int_distribution<int>(a + 1, kN)(rng));
}

AnalyticFnSpec random_fn(std::mt19937_64& rng) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
            return AnalyticFnSpec::exp_fn();
        case 1:
            return AnalyticFnSpec::log1p_fn();
        default:
            return AnalyticFnSpec::pow1p_fn(small_rational(rng));
    }
}

Expr random_expr(std::mt19937_64& rng, int depth) {
    const int pick = std::uniform_int_distribution<int>(0, depth > 0 ? 4 : 1)(rng);
    switch (pick) {
        case 0:
            return random_gen(rng);
        case 1:
            return Expr::scalar(small_rational(rng));
        case 2:
            return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
        case 3:
            return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
        default: {
            Expr sub = small_rational(rng) * random_upper_gen(rng);
            if (std::bernoulli_distribution(0.5)(rng)) sub = sub + random_upper_gen(rng) * random_upper_gen(rng);
            return Expr::fn(random_fn(rng), sub);
        }
    }
}

// (Δ⊗id)Δ: x -> Δ(x) ⊗ 1 + 1 ⊗ x, or (id⊗Δ)Δ: x -> x ⊗ 1 + 1 ⊗ Δ(x).
Morphism nested_coproduct(const Morphism& phi, bool delta_on_left) {
    const Morphism delta = primitive_extension(phi);
    const Morphism& a = delta_on_left ? delta : phi;
    const Morphism& b = delta_on_left ? phi : delta;
    Morphism out{phi.N, a.target_dim * b.target_dim, {}};
    for (int i = 1; i <= phi.N; ++i)
        for (int j = 1; j <= phi.N; ++j)
            out.images.push_back(kron(a.image(i, j), I(b.target_dim)) + kron(I(a.target_dim), b.image(i, j)));
    return out;
}

}  // namespace

TEST(CoreLaws, ThousandRandomCases) {
    for (const auto& r : core_property_checks(20240611, 1000)) {
        EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
        EXPECT_EQ(r.detail.rfind("1000 cases", 0), 0u) << r.detail;
    }
}

TEST(CoreLaws, RandomNilpotentIsNilpotent) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < kCases; ++k) {
        const auto m = random_nilpotent(rng, 5);
        EXPECT_LE(nilpotency_index(m), 5u);
    }
}

TEST(ExprLaws, EvaluationIsMultiplicative) {
    std::mt19937_64 rng(1);
    const auto phi = fundamental_morphism(kN);
    const auto delta = primitive_extension(phi);
    for (int k = 0; k < kCases; ++k) {
        const Expr x = random_expr(rng, 3);
        const Expr y = random_expr(rng, 3);
        EXPECT_EQ(eval_expr(x * y, phi), eval_expr(x, phi) * eval_expr(y, phi));
        EXPECT_EQ(eval_expr(x + y, delta), eval_expr(x, delta) + eval_expr(y, delta));
        EXPECT_EQ(eval_expr(x * y, delta), eval_expr(x, delta) * eval_expr(y, delta));
    }
}

TEST(ExprLaws, AntipodeIsAntiMorphism) {
    std::mt19937_64 rng(2);
    const auto phi = fundamental_morphism(kN);
    for (int k = 0; k < kCases; ++k) {
        const Expr x = random_expr(rng, 3);
        const Expr y = random_expr(rng, 3);
        EXPECT_EQ(antipode_eval(x * y, phi), antipode_eval(y, phi) * antipode_eval(x, phi));
        EXPECT_EQ(antipode_eval(antipode(x), phi), eval_expr(x, phi));
    }
}

TEST(ExprLaws, CounitIsTheZeroRepresentation) {
    std::mt19937_64 rng(3);
    const auto zero = zero_morphism(kN);
    for (int k = 0; k < kCases; ++k) {
        const Expr x = random_expr(rng, 3);
        const Expr y = random_expr(rng, 3);
        EXPECT_EQ(eval_expr(x, zero), counit_eval(x) * I(1));
        EXPECT_EQ(counit_eval(x * y), counit_eval(x) * counit_eval(y));
    }
}

TEST(ExprLaws, CoproductIsCoassociative) {
    std::mt19937_64 rng(4);
    const auto phi = fundamental_morphism(kN);
    const auto left = nested_coproduct(phi, true);
    const auto right = nested_coproduct(phi, false);
    for (int k = 0; k < kCases / 3; ++k) {
        const Expr x = random_expr(rng, 2);
        EXPECT_EQ(eval_expr(x, left), eval_expr(x, right));
    }
}

TEST(ExprLaws, TwistedCoproductIsMultiplicative) {
    std::mt19937_64 rng(5);
    const auto phi = fundamental_morphism(kN);
    const auto F = extended_twist_generic(kN, 2, Rational(1, 3));
    for (int k = 0; k < 40; ++k) {
        const Expr x = random_expr(rng, 2);
        const Expr y = random_expr(rng, 2);
        EXPECT_TRUE(multiplicativity_check(F, x, y, phi).passed);
    }
}

TEST(TensorLaws, SwapIsInvolutionAndKronFlip) {
    std::mt19937_64 rng(6);
    for (int k = 0; k < kCases; ++k) {
        const auto a = random_matrix(rng, 3);
        const auto b = random_matrix(rng, 3);
        EXPECT_EQ(swap_legs(kron(a, b), 3), kron(b, a));
        const auto m = random_matrix(rng, 9, 0.3);
        EXPECT_EQ(swap_legs(swap_legs(m, 3), 3), m);
    }
}
