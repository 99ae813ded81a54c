#include "twistlab/core_properties.hpp"

#include <string>

#include "twistlab/analytic.hpp"
#include "twistlab/tensor.hpp"

namespace twistlab {

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    int n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

std::size_t random_dim(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Records the first failing case; later failures only bump the residual.
struct LawTally {
    CheckResult result;
    int cases = 0;

    explicit LawTally(std::string name) { result.name = std::move(name); }

    void record(const SparseMatrix& lhs, const SparseMatrix& rhs) {
        ++cases;
        result.dims = std::max(result.dims, lhs.dim());
        const std::size_t r = residual_nnz(lhs, rhs);
        if (r != 0 && result.residual_nnz == 0) result.detail = "first failure at case " + std::to_string(cases);
        result.residual_nnz += r;
    }

    CheckResult finish(const Stopwatch& sw) {
        result.passed = result.residual_nnz == 0;
        const std::string count = std::to_string(cases) + " cases";
        result.detail = result.detail.empty() ? count : count + "; " + result.detail;
        result.elapsed_seconds = sw.seconds();
        return result;
    }
};

}  // namespace

SparseMatrix random_nilpotent(std::mt19937_64& rng, std::size_t dim, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<Entry> entries;
    for (std::size_t i = 1; i <= dim; ++i)
        for (std::size_t j = i + 1; j <= dim; ++j)
            if (keep(rng)) entries.push_back({i, j, random_rational(rng)});
    return SparseMatrix::from_entries(dim, std::move(entries));
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t dim, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<Entry> entries;
    for (std::size_t i = 1; i <= dim; ++i)
        for (std::size_t j = 1; j <= dim; ++j)
            if (keep(rng)) entries.push_back({i, j, random_rational(rng)});
    return SparseMatrix::from_entries(dim, std::move(entries));
}

std::vector<CheckResult> core_property_checks(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;

    {
        Stopwatch sw;
        LawTally law("core[mixed-product]");
        for (int k = 0; k < cases; ++k) {
            const std::size_t p = random_dim(rng, 1, 4);
            const std::size_t q = random_dim(rng, 1, 4);
            const auto a = random_matrix(rng, p);
            const auto b = random_matrix(rng, q);
            const auto c = random_matrix(rng, p);
            const auto d = random_matrix(rng, q);
            law.record(kron(a, b) * kron(c, d), kron(a * c, b * d));
        }
        out.push_back(law.finish(sw));
    }
    {
        Stopwatch sw;
        LawTally law("core[exp-log]");
        for (int k = 0; k < cases; ++k) {
            const auto m = random_nilpotent(rng, random_dim(rng, 1, 6));
            const auto l = analytic_apply(AnalyticFnSpec::log1p_fn(), m);
            law.record(analytic_apply(AnalyticFnSpec::exp_fn(), l), SparseMatrix::identity(m.dim()) + m);
        }
        out.push_back(law.finish(sw));
    }
    {
        Stopwatch sw;
        LawTally law("core[pow1p-inverse]");
        for (int k = 0; k < cases; ++k) {
            const auto m = random_nilpotent(rng, random_dim(rng, 1, 6));
            const Rational q = random_rational(rng);
            law.record(analytic_apply(AnalyticFnSpec::pow1p_fn(q), m) * analytic_apply(AnalyticFnSpec::pow1p_fn(-q), m),
                       SparseMatrix::identity(m.dim()));
        }
        out.push_back(law.finish(sw));
    }
    {
        Stopwatch sw;
        LawTally law("core[exp-additivity]");
        for (int k = 0; k < cases; ++k) {
            const auto m = random_nilpotent(rng, random_dim(rng, 1, 6));
            const auto n = random_rational(rng) * m + random_rational(rng) * (m * m);
            const auto exp = AnalyticFnSpec::exp_fn();
            law.record(analytic_apply(exp, m + n), analytic_apply(exp, m) * analytic_apply(exp, n));
        }
        out.push_back(law.finish(sw));
    }
    return out;
}

}  // namespace twistlab
