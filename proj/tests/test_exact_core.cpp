#include <gtest/gtest.h>

#include <cstdint>
#include <limits>

#include "test_util.hpp"
#include "twistlab/analytic.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/tensor.hpp"

using namespace twistlab;
using namespace twistlab::testing;

namespace {

const Rational half(1, 2);

}  // namespace

TEST(Rational, ReducedWithPositiveDenominator) {
    const Rational q(6, -4);
    EXPECT_EQ(q.to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 7).to_string(), "0/1");
    EXPECT_EQ(Rational(5).to_string(), "5/1");
    EXPECT_EQ(Rational(2, 4), half);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), half);
    EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), half);
    EXPECT_EQ(Rational(2, 3) / Rational(4, 3), half);
    EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
    EXPECT_LT(Rational(1, 3), half);
    Rational acc(1);
    acc.add_product(Rational(1, 2), Rational(1, 3));
    EXPECT_EQ(acc, Rational(7, 6));
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("3/6"), half);
    EXPECT_EQ(Rational::parse("-7"), Rational(-7));
    const Rational big = Rational::parse("123456789012345678901234567891/7");
    EXPECT_FALSE(big.is_small());
    EXPECT_EQ(big.numerator_string(), "123456789012345678901234567891");
    EXPECT_EQ(big.denominator_string(), "7");
}

TEST(Rational, Errors) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("2/-4"), std::invalid_argument);
}

TEST(Rational, OverflowSpillsAndDemotes) {
    const Rational m(std::numeric_limits<std::int64_t>::max());
    const Rational twice = m * Rational(2);
    EXPECT_FALSE(twice.is_small());
    EXPECT_EQ(twice.numerator_string(), "18446744073709551614");
    const Rational back = twice / Rational(2);
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, m);
    const Rational neg = Rational(std::numeric_limits<std::int64_t>::min()) * Rational(-1);
    EXPECT_EQ(neg.numerator_string(), "9223372036854775808");
    EXPECT_EQ(neg - Rational(1), m);
}

TEST(Rational, Binomial) {
    // (1 + x)^(-1/2) = 1 - x/2 + 3x^2/8 - 5x^3/16 + ...
    EXPECT_EQ(binomial(Rational(-1, 2), 0), Rational(1));
    EXPECT_EQ(binomial(Rational(-1, 2), 1), Rational(-1, 2));
    EXPECT_EQ(binomial(Rational(-1, 2), 2), Rational(3, 8));
    EXPECT_EQ(binomial(Rational(-1, 2), 3), Rational(-5, 16));
    EXPECT_EQ(binomial(Rational(5), 2), Rational(10));
    EXPECT_EQ(binomial(Rational(2), 3), Rational(0));
    EXPECT_EQ(factorial(5), Rational(120));
}

TEST(SparseMatrix, ConstructionAndEquality) {
    const auto m = with_entries(3, {{1, 2, Rational(1)}, {1, 2, Rational(-1)}, {3, 1, half}});
    EXPECT_EQ(m.nnz(), 1u);
    EXPECT_EQ(m.at(3, 1), half);
    EXPECT_EQ(m.at(1, 2), Rational(0));
    EXPECT_EQ(m, half * e(3, 3, 1));
    EXPECT_TRUE(I(3).is_identity());
    Rational c;
    EXPECT_TRUE((Rational(3) * I(2)).is_scalar(c));
    EXPECT_EQ(c, Rational(3));
    EXPECT_FALSE(e(2, 1, 2).is_scalar(c));
}

TEST(SparseMatrix, Products) {
    EXPECT_EQ(e(3, 1, 2) * e(3, 2, 3), e(3, 1, 3));
    EXPECT_TRUE((e(3, 2, 3) * e(3, 1, 2)).is_zero());
    EXPECT_EQ(commutator(e(2, 1, 2), e(2, 2, 1)), diag({1, -1}));
    EXPECT_EQ(residual_nnz(I(2), e(2, 1, 1)), 1u);
    EXPECT_EQ(residual_nnz(I(2), I(2)), 0u);
}

TEST(SparseMatrix, Errors) {
    EXPECT_THROW(SparseMatrix(0), DimensionMismatch);
    EXPECT_THROW((void)(I(2) + I(3)), DimensionMismatch);
    EXPECT_THROW((void)(I(2) * I(3)), DimensionMismatch);
    EXPECT_THROW((void)I(2).at(3, 1), IndexOutOfRange);
    EXPECT_THROW(with_entries(2, {{0, 1, Rational(1)}}), IndexOutOfRange);
}

TEST(Tensor, Kron) {
    EXPECT_EQ(kron(e(2, 1, 2), e(2, 1, 2)), e(4, 1, 4));
    EXPECT_EQ(kron(I(2), I(2)), I(4));
    const auto h = diag({half, -half});
    EXPECT_EQ(kron(h, e(2, 1, 2)), with_entries(4, {{1, 2, half}, {3, 4, -half}}));
}

TEST(Tensor, EmbedLeg) {
    EXPECT_EQ(embed_leg(e(2, 1, 2), 1, 2), kron(e(2, 1, 2), I(2)));
    EXPECT_EQ(embed_leg(e(2, 1, 2), 2, 2), kron(I(2), e(2, 1, 2)));
    EXPECT_EQ(embed_leg(e(2, 1, 2), 2, 3), kron(kron(I(2), e(2, 1, 2)), I(2)));
    EXPECT_THROW((void)embed_leg(e(2, 1, 2), 3, 2), LegOutOfRange);
    EXPECT_THROW((void)embed_leg(e(2, 1, 2), 0, 2), LegOutOfRange);
}

TEST(Tensor, SwapAndPermute) {
    const auto a = e(2, 1, 2);
    const auto b = diag({1, 2});
    EXPECT_EQ(swap_legs(kron(a, b), 2), kron(b, a));
    const auto c = e(2, 2, 1);
    const std::vector<int> cyc{1, 2, 0};  // slot 0 -> 1, 1 -> 2, 2 -> 0
    EXPECT_EQ(permute_legs(kron(kron(a, b), c), 2, cyc), kron(kron(c, a), b));
}

TEST(Analytic, NilpotencyIndex) {
    EXPECT_EQ(nilpotency_index(e(2, 1, 2)), 2u);
    EXPECT_EQ(nilpotency_index(SparseMatrix(3)), 1u);
    EXPECT_EQ(nilpotency_index(e(3, 1, 2) + e(3, 2, 3)), 3u);
    EXPECT_THROW((void)nilpotency_index(I(2)), NotNilpotent);
    EXPECT_THROW((void)analytic_apply(AnalyticFnSpec::exp_fn(), e(2, 2, 1) + e(2, 1, 2)), NotNilpotent);
}

TEST(Analytic, Examples) {
    const auto hE = kron(diag({half, -half}), e(2, 1, 2));
    EXPECT_EQ(analytic_apply(AnalyticFnSpec::exp_fn(), hE), I(4) + hE);
    EXPECT_EQ(analytic_apply(AnalyticFnSpec::log1p_fn(), e(2, 1, 2)), e(2, 1, 2));
    EXPECT_EQ(analytic_apply(AnalyticFnSpec::pow1p_fn(Rational(-1, 2)), e(3, 1, 3)), I(3) - half * e(3, 1, 3));
}

TEST(Analytic, SeriesOnJordanBlock) {
    // n = e12 + e23: n^2 = e13, n^3 = 0.
    const auto n = e(3, 1, 2) + e(3, 2, 3);
    const auto n2 = e(3, 1, 3);
    EXPECT_EQ(analytic_apply(AnalyticFnSpec::exp_fn(), n), I(3) + n + half * n2);
    EXPECT_EQ(analytic_apply(AnalyticFnSpec::log1p_fn(), n), n - half * n2);
    EXPECT_EQ(analytic_apply(AnalyticFnSpec::pow1p_fn(Rational(-1, 2)), n), I(3) - half * n + Rational(3, 8) * n2);
    EXPECT_EQ(AnalyticFnSpec::log1p_fn().coefficient(3), Rational(1, 3));
    EXPECT_EQ(AnalyticFnSpec::exp_fn().coefficient(3), Rational(1, 6));
}
