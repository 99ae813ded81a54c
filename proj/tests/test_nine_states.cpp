#include <gtest/gtest.h>

#include "test_util.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/hopf_check.hpp"
#include "twistlab/nine_states.hpp"
#include "twistlab/tensor.hpp"

using namespace twistlab;
using namespace twistlab::testing;

namespace {

const Rational half(1, 2);
using K = Combinator::Kind;

bool same_entry(const TableEntry& a, const TableEntry& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].coeff != b[k].coeff || !(a[k].c == b[k].c)) return false;
    return true;
}

}  // namespace

TEST(Combinator, P0AndTpp) {
    const auto phi = fundamental_morphism(6);
    const auto E13 = e(6, 1, 3);
    EXPECT_EQ(combinator_eval({K::P0, 0}, Expr::gen(1, 3), 6), kron(E13, I(6)) + kron(I(6), E13));
    // e^{(σ16 + σ25)/2} = (1 + E16)^{1/2} (1 + E25)^{1/2} = (1 + E16/2)(1 + E25/2).
    const auto E15 = e(6, 1, 5);
    const auto right = (I(6) + half * e(6, 1, 6)) * (I(6) + half * e(6, 2, 5));
    EXPECT_EQ(combinator_eval({K::Tpp, 0}, Expr::gen(1, 5), 6, 3, phi), kron(E15, right) + kron(I(6), E15));
}

TEST(Combinator, S1Minus) {
    // -E13 ⊗ E26 e^{-σ16/2}; E26 E16 = 0 so the exponential drops out.
    const auto got = combinator_eval({K::S1minus, 0}, Expr::gen(1, 1), 6, 3);
    EXPECT_EQ(got, -kron(e(6, 1, 3), e(6, 2, 6)));
    EXPECT_THROW((void)combinator_eval({K::Pplus, 3}, Expr::gen(1, 3), 6), IndexOutOfRange);
}

TEST(Combinator, Names) {
    EXPECT_EQ((Combinator{K::Pplus, 2}).to_string(), "P2+");
    EXPECT_TRUE((Combinator{K::S2plus, 0}).is_correction());
    EXPECT_FALSE((Combinator{K::TR, 1}).is_correction());
    EXPECT_EQ(entry_to_string({{1, {K::Pplus, 2}}, {1, {K::S1minus, 0}}}), "P2+ + S1-");
}

TEST(Tables, Examples) {
    const auto t = costructure_table(StateId::J1J0, 7, 3);
    EXPECT_TRUE(same_entry(t.entry_for(Root{1, 6}), {{1, {K::Tpp, 0}}}));
    const auto u = costructure_table(StateId::E0J1J0, 6, 3);
    EXPECT_TRUE(same_entry(u.entry_for(Root{2, 3}), {{1, {K::Pplus, 2}}, {1, {K::S1minus, 0}}}));
    EXPECT_THROW((void)costructure_table("bogus", 6, 3), UnknownState);
    EXPECT_THROW((void)costructure_table(StateId::J1J0, 6, 5), IndexOutOfRange);
}

TEST(Tables, StateNames) {
    for (StateId s : kAllStates) EXPECT_EQ(parse_state(state_name(s)), s);
    EXPECT_EQ(parse_state("Ẽ0J1J0"), StateId::Et0J1J0);
    EXPECT_EQ(state_name(StateId::E1E0Et1J1J0), "E1E0~E1J1J0");
    EXPECT_THROW((void)parse_state("E2J1J0"), UnknownState);
}

TEST(Tables, HeisenbergGenerators) {
    const std::vector<Root> g{{1, 3}, {2, 3}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 5}, {3, 6}};
    EXPECT_EQ(heisenberg_generators(6, 3), g);
}

TEST(States, AllAtN6) {
    for (StateId s : kAllStates)
        for (int r : {3, 4}) {
            const auto res = verify_state(s, 6, r);
            EXPECT_TRUE(res.passed) << res.name << ": " << res.detail;
        }
}

TEST(States, ExampleN7) {
    const auto res = verify_state(StateId::E1E0Et1J1J0, 7, 4);
    EXPECT_TRUE(res.passed) << res.detail;
    EXPECT_THROW((void)verify_state(StateId::J1J0, 5, 3), NotApplicable);
}

TEST(States, AlternativeRecipeOrder) {
    // Reaching ~E0E0J1J0 through the other side of the square gives the same coproducts.
    const int N = 6;
    const int r = 3;
    const auto phi = fundamental_morphism(N);
    const auto table = costructure_table(StateId::Et0E0J1J0, N, r);
    const auto alt = sequence_of(N, {state_factor(N, r, "J0"), state_factor(N, r, "J1"), state_factor(N, r, "~E0"),
                                     state_factor(N, r, "E0")});
    const auto fwd = materialize(table.twist_recipe, phi);
    const auto other = materialize(alt, phi);
    for (const Root& g : table.generators)
        EXPECT_EQ(twisted_coproduct(fwd, g.generator(), phi), twisted_coproduct(other, g.generator(), phi))
            << g.to_string();
}

TEST(States, Locality) {
    EXPECT_TRUE(verify_locality(6, 3, fundamental_morphism(6)).passed);
}

TEST(TwoJordanian, Block) {
    EXPECT_TRUE(verify_two_jordanian(6, fundamental_morphism(6)).passed);
    EXPECT_FALSE(two_jordanian_block(6).empty());
}

TEST(Diagram, Edges) {
    EXPECT_EQ(diagram_edges().size(), 10u);
    const auto r = verify_diagram(6, 3);
    EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Matreshka, SmallN) {
    for (int N : {4, 5, 6}) {
        const auto r = verify_matreshka(N);
        EXPECT_TRUE(r.passed) << N << ": " << r.detail;
    }
    EXPECT_THROW((void)verify_matreshka(3), NotApplicable);
}

TEST(Transitions, Schemes) {
    for (int N : {3, 6}) {
        const auto r = verify_transition_schemes(N);
        EXPECT_TRUE(r.passed) << N << ": " << r.detail;
    }
}

TEST(ExtendedCostructure, GenericAlpha) {
    for (const Rational& a : {Rational(1, 3), Rational(2, 5)}) {
        EXPECT_TRUE(verify_extended_costructure(3, 2, a, fundamental_morphism(3)).passed);
        EXPECT_TRUE(verify_extended_costructure(6, 3, a, fundamental_morphism(6)).passed);
    }
}
