#include "twistlab/twist.hpp"

#include <sstream>

#include "twistlab/analytic.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/tensor.hpp"

namespace twistlab {

namespace {

// e^{c σ_ij} = (1 + E_ij)^c
Expr exp_sigma(const Rational& c, int i, int j) {
    return Expr::fn(AnalyticFnSpec::pow1p_fn(c), Expr::gen(i, j));
}

std::string idx(int k) { return std::to_string(k); }

std::string show(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

TwistSequence TwistSequence::then(TwistFactor f) const {
    if (!factors.empty() && f.N != N) throw DimensionMismatch("twist factors must share N");
    TwistSequence out = *this;
    out.N = f.N;
    out.factors.push_back(std::move(f));
    return out;
}

TwistSequence TwistSequence::then(const TwistSequence& later) const {
    TwistSequence out = *this;
    for (const auto& f : later.factors) out = out.then(f);
    return out;
}

std::string TwistSequence::name() const {
    if (factors.empty()) return "trivial";
    std::string out;
    // Product order: latest factor leftmost.
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) out += (out.empty() ? "" : "*") + it->name;
    return out;
}

TwistSequence sequence_of(int N, std::vector<TwistFactor> factors) {
    TwistSequence seq{N, {}};
    for (auto& f : factors) seq = seq.then(std::move(f));
    return seq;
}

TwistFactor jordanian_factor(int N, int k) {
    const int j = N - k + 1;
    if (k < 1 || j > N || k >= j)
        throw IndexOutOfRange("Jordanian factor k=" + idx(k) + " needs k < N-k+1 for N=" + idx(N));
    return TwistFactor{"J" + idx(k - 1), {{cartan_element(N, k, j), sigma(k, j)}}, N};
}

TwistFactor extension_for_root(int N, const Root& initial, int s, const Rational& beta) {
    const int i = initial.i;
    const int j = initial.j;
    if (i < 1 || j < 1 || i > N || j > N || i == j || s < 1 || s > N || s == i || s == j)
        throw IndexOutOfRange("extension e" + idx(i) + "-e" + idx(j) + " through s=" + idx(s) + " for N=" + idx(N));
    return TwistFactor{"Ext[" + initial.to_string() + "](" + idx(s) + ")",
                       {{Expr::gen(i, s), Expr::gen(s, j) * exp_sigma(-beta, i, j)}},
                       N};
}

TwistFactor extension_factor(int N, int k, int r, const Rational& beta) {
    const int j = N - k + 1;
    if (k < 1 || !(k < r && r < j))
        throw IndexOutOfRange("extension E" + idx(k - 1) + "(" + idx(r) + ") needs k < r < N-k+1 for N=" + idx(N));
    auto f = extension_for_root(N, Root{k, j}, r, beta);
    f.name = "E" + idx(k - 1) + "(" + idx(r) + ")";
    return f;
}

TwistSequence extended_twist_generic(int N, int r, const Rational& alpha) {
    const Carrier c = carrier_embedding(N, r, alpha);
    TwistFactor jord{"J[a=" + show(alpha) + "]", {{c.H, sigma(1, N)}}, N};
    TwistFactor ext{"E[b=" + show(c.beta) + "](" + idx(r) + ")",
                    {{c.A, c.B * exp_sigma(-c.beta, 1, N)}},
                    N};
    return sequence_of(N, {jord, ext});
}

TwistSequence chain_twist(int N, int p) {
    const ChainPlan plan = chain_plan(N, p);
    TwistSequence seq{N, {}};
    for (std::size_t k = 0; k < plan.steps.size(); ++k) {
        const int kk = static_cast<int>(k) + 1;
        seq = seq.then(jordanian_factor(N, kk));
        for (const auto& root : plan.steps[k].prime) seq = seq.then(extension_factor(N, kk, root.j));
    }
    return seq;
}

TwistSequence multijordanian_twist(int N, int p) {
    const ChainPlan plan = chain_plan(N, p);
    TwistSequence seq{N, {}};
    for (std::size_t k = 0; k < plan.steps.size(); ++k) seq = seq.then(jordanian_factor(N, static_cast<int>(k) + 1));
    return seq;
}

TwistFactor external_factor(int N, ExternalKind which) {
    if (N < 6) throw NotApplicable("external factors need N > 5, got N=" + idx(N));
    const Rational half(1, 2);
    if (which == ExternalKind::E0tilde) {
        Expr left1 = Expr::sum({Expr::gen(1, 2), half * Expr::gen(1, N - 1), Expr::gen(1, N - 1) * cartan_element(N, 2, N - 1)});
        Expr right1 = Expr::prod({Expr::gen(2, N), exp_sigma(-half, 1, N), exp_sigma(-half, 2, N - 1)});
        Expr right2 = Expr::prod({Expr::gen(N - 1, N), exp_sigma(-half, 1, N), exp_sigma(half, 2, N - 1)});
        return TwistFactor{"~E0", {{left1, right1}, {Expr::gen(1, N - 1), right2}}, N};
    }
    Expr left1 = Expr::sum({Expr::gen(2, 1), half * Expr::gen(2, N), Expr::gen(2, N) * cartan_element(N, 1, N)});
    Expr right1 = Expr::prod({Expr::gen(1, N - 1), exp_sigma(-half, 1, N), exp_sigma(-half, 2, N - 1)});
    Expr right2 = Expr::prod({Expr::gen(N, N - 1), exp_sigma(half, 1, N), exp_sigma(-half, 2, N - 1)});
    return TwistFactor{"~E1", {{left1, right1}, {Expr::gen(2, N), right2}}, N};
}

TwistSequence alternative_chain(int N) {
    if (N < 6) throw NotApplicable("alternative chain needs N > 5, got N=" + idx(N));
    TwistSequence seq{N, {}};
    seq = seq.then(jordanian_factor(N, 2));
    const Root second{2, N - 1};
    for (int s = 1; s <= N; ++s) {
        if (s == 2 || s == N - 1) continue;
        auto f = extension_for_root(N, second, s);
        f.name = "E'1(" + idx(s) + ")";
        seq = seq.then(std::move(f));
    }
    seq = seq.then(jordanian_factor(N, 1));
    for (int r = 3; r <= N - 2; ++r) {
        auto f = extension_factor(N, 1, r);
        f.name = "E'0(" + idx(r) + ")";
        seq = seq.then(std::move(f));
    }
    return seq;
}

void check_factor_counits(const TwistFactor& f) {
    for (const auto& t : f.terms)
        if (!counit_eval(t.left).is_zero())
            throw NotApplicable("factor " + f.name + " has a left leg with nonzero counit");
}

SparseMatrix factor_argument(const TwistFactor& f, const Morphism& left, const Morphism& right) {
    SparseMatrix acc(left.target_dim * right.target_dim);
    for (const auto& t : f.terms) {
        SparseMatrix u = eval_expr(t.left, left);
        if (u.is_zero()) continue;
        SparseMatrix w = eval_expr(t.right, right);
        if (w.is_zero()) continue;
        acc += kron(u, w);
    }
    return acc;
}

SparseMatrix materialize_factor(const TwistFactor& f, const Morphism& left, const Morphism& right) {
    return analytic_apply(AnalyticFnSpec::exp_fn(), factor_argument(f, left, right));
}

SparseMatrix materialize_factor_inverse(const TwistFactor& f, const Morphism& left, const Morphism& right) {
    return analytic_apply(AnalyticFnSpec::exp_fn(), -factor_argument(f, left, right));
}

MaterializedTwist materialize(const TwistSequence& seq, const Morphism& left, const Morphism& right) {
    const std::size_t dim = left.target_dim * right.target_dim;
    MaterializedTwist out{SparseMatrix::identity(dim), SparseMatrix::identity(dim)};
    for (const auto& f : seq.factors) {
        SparseMatrix arg = factor_argument(f, left, right);
        if (arg.is_zero()) continue;
        out.forward = analytic_apply(AnalyticFnSpec::exp_fn(), arg) * out.forward;
        out.inverse = out.inverse * analytic_apply(AnalyticFnSpec::exp_fn(), -arg);
    }
    return out;
}

MaterializedTwist materialize(const TwistSequence& seq, const Morphism& phi) { return materialize(seq, phi, phi); }

}  // namespace twistlab
