#include <gtest/gtest.h>

#include <variant>

#include "test_util.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/tensor.hpp"
#include "twistlab/twist.hpp"

using namespace twistlab;
using namespace twistlab::testing;

namespace {

const Rational half(1, 2);

std::vector<std::string> factor_names(const TwistSequence& s) {
    std::vector<std::string> out;
    for (const auto& f : s.factors) out.push_back(f.name);
    return out;
}

}  // namespace

TEST(Twist, JordanianN2) {
    const auto phi = fundamental_morphism(2);
    const auto F = materialize_factor(jordanian_factor(2, 1), phi, phi);
    EXPECT_EQ(F, I(4) + with_entries(4, {{1, 2, half}, {3, 4, -half}}));
    EXPECT_EQ(materialize(sequence_of(2, {jordanian_factor(2, 1)}), phi).forward,
              I(4) + kron(diag({half, -half}), e(2, 1, 2)));
}

TEST(Twist, JordanianN6IsUnipotentOfDegreeTwo) {
    const auto phi = fundamental_morphism(6);
    const auto F = materialize_factor(jordanian_factor(6, 1), phi, phi);
    EXPECT_EQ(F.dim(), 36u);
    const auto n = F - I(36);
    EXPECT_FALSE(n.is_zero());
    EXPECT_TRUE((n * n).is_zero());
    EXPECT_THROW((void)jordanian_factor(6, 4), IndexOutOfRange);
    EXPECT_THROW((void)jordanian_factor(6, 0), IndexOutOfRange);
}

TEST(Twist, ExtensionFactor) {
    const auto phi = fundamental_morphism(3);
    // e12 ⊗ e23 sits at row (1-1)*3+2 = 2, column (2-1)*3+3 = 6.
    EXPECT_EQ(materialize_factor(extension_factor(3, 1, 2, half), phi, phi), I(9) + e(9, 2, 6));
    const auto f = extension_factor(6, 1, 3, half);
    ASSERT_EQ(f.terms.size(), 1u);
    EXPECT_EQ(f.terms[0].left, Expr::gen(1, 3));
    const auto phi6 = fundamental_morphism(6);
    EXPECT_EQ(eval_expr(f.terms[0].right, phi6), e(6, 3, 6) * (I(6) - half * e(6, 1, 6)));
    EXPECT_EQ(f.name, "E0(3)");
    EXPECT_THROW((void)extension_factor(6, 1, 6, half), IndexOutOfRange);
    EXPECT_THROW((void)extension_factor(6, 1, 1, half), IndexOutOfRange);
}

TEST(Twist, ExtendedGeneric) {
    const auto s = extended_twist_generic(3, 2, Rational(1, 3));
    ASSERT_EQ(s.factors.size(), 2u);
    const auto phi = fundamental_morphism(3);
    EXPECT_EQ(eval_expr(s.factors[0].terms[0].left, phi), Rational(1, 3) * e(3, 1, 1) - Rational(2, 3) * e(3, 3, 3));
    EXPECT_EQ(eval_expr(s.factors[1].terms[0].right, phi), e(3, 2, 3));
    EXPECT_EQ(s.name(), "E[b=2/3](2)*J[a=1/3]");
}

TEST(Twist, ChainShapes) {
    const std::vector<std::string> two{"J0", "E0(2)", "E0(3)", "E0(4)", "E0(5)", "J1", "E1(3)", "E1(4)"};
    EXPECT_EQ(factor_names(chain_twist(6, 1)), two);
    const std::vector<std::string> four{"J0", "E0(2)", "E0(3)", "J1"};
    EXPECT_EQ(factor_names(chain_twist(4, 1)), four);
    const std::vector<std::string> one{"J0"};
    EXPECT_EQ(factor_names(chain_twist(2, 0)), one);
    const std::vector<std::string> multi{"J0", "J1", "J2"};
    EXPECT_EQ(factor_names(multijordanian_twist(7, 2)), multi);
    EXPECT_EQ(sequence_of(2, {}).name(), "trivial");
}

TEST(Twist, ExternalFactors) {
    const auto t0 = external_factor(6, ExternalKind::E0tilde);
    ASSERT_EQ(t0.terms.size(), 2u);
    const auto& sum = std::get<Expr::Sum>(t0.terms[0].left.node());
    ASSERT_EQ(sum.terms.size(), 3u);
    EXPECT_EQ(sum.terms[2], Expr::gen(1, 5) * cartan_element(6, 2, 5));
    EXPECT_EQ(t0.terms[1].left, Expr::gen(1, 5));
    // ~E1 is ~E0 with indices renumbered 1<->2, N-1<->N.
    const auto t1 = external_factor(6, ExternalKind::E1tilde);
    const std::map<int, int> swap{{1, 2}, {2, 1}, {5, 6}, {6, 5}};
    const auto phi = fundamental_morphism(6);
    ASSERT_EQ(t1.terms.size(), 2u);
    for (std::size_t a = 0; a < 2; ++a) {
        EXPECT_EQ(eval_expr(relabel(t0.terms[a].left, swap), phi), eval_expr(t1.terms[a].left, phi));
        EXPECT_EQ(eval_expr(relabel(t0.terms[a].right, swap), phi), eval_expr(t1.terms[a].right, phi));
    }
    EXPECT_THROW((void)external_factor(5, ExternalKind::E0tilde), NotApplicable);
}

TEST(Twist, MaterializeInverse) {
    const auto phi = fundamental_morphism(6);
    const auto m = materialize(chain_twist(6, 1), phi);
    EXPECT_EQ(m.forward.dim(), 36u);
    EXPECT_EQ(m.forward * m.inverse, I(36));
    EXPECT_EQ(m.inverse * m.forward, I(36));
    const auto id = materialize(TwistSequence{3, {}}, fundamental_morphism(3));
    EXPECT_EQ(id.forward, I(9));
}

TEST(Twist, ApplicationOrder) {
    // Later factors multiply from the left.
    const auto phi = fundamental_morphism(3);
    const auto j = jordanian_factor(3, 1);
    const auto x = extension_factor(3, 1, 2);
    const auto m = materialize(sequence_of(3, {j, x}), phi).forward;
    EXPECT_EQ(m, materialize_factor(x, phi, phi) * materialize_factor(j, phi, phi));
    EXPECT_EQ(materialize_factor_inverse(x, phi, phi) * materialize_factor(x, phi, phi), I(9));
}

TEST(Twist, AlternativeChain) {
    const auto s = alternative_chain(6);
    const std::vector<std::string> names{"J1", "E'1(1)", "E'1(3)", "E'1(4)", "E'1(6)", "J0", "E'0(3)", "E'0(4)"};
    EXPECT_EQ(factor_names(s), names);
    EXPECT_THROW((void)alternative_chain(5), NotApplicable);
}

TEST(Twist, FactorCounits) {
    EXPECT_NO_THROW(check_factor_counits(jordanian_factor(4, 1)));
    EXPECT_NO_THROW(check_factor_counits(external_factor(6, ExternalKind::E0tilde)));
    const TwistFactor bad{"bad", {{Expr::scalar(Rational(1)), Expr::gen(1, 2)}}, 2};
    EXPECT_THROW(check_factor_counits(bad), NotApplicable);
}
