#pragma once

#include <vector>

#include "twistlab/rational.hpp"
#include "twistlab/sparse_matrix.hpp"

namespace twistlab {

/// A power series evaluated on a nilpotent argument m:
///   exp    -> e^m
///   log1p  -> ln(1 + m)
///   pow1p  -> (1 + m)^q, q rational
struct AnalyticFnSpec {
    enum class Kind { exp, log1p, pow1p };

    Kind kind = Kind::exp;
    Rational exponent;  // pow1p only

    static AnalyticFnSpec exp_fn() { return {Kind::exp, Rational(0)}; }
    static AnalyticFnSpec log1p_fn() { return {Kind::log1p, Rational(0)}; }
    static AnalyticFnSpec pow1p_fn(Rational q) { return {Kind::pow1p, std::move(q)}; }

    /// Coefficient of m^k in the series.
    [[nodiscard]] Rational coefficient(unsigned k) const;

    friend bool operator==(const AnalyticFnSpec&, const AnalyticFnSpec&) = default;
};

/// Smallest k with m^k = 0. Throws NotNilpotent when m^dim != 0.
[[nodiscard]] unsigned nilpotency_index(const SparseMatrix& m);

/// m^0, m^1, ..., m^(k-1) for the nilpotency index k of m.
[[nodiscard]] std::vector<SparseMatrix> nilpotent_powers(const SparseMatrix& m);

/// Exact finite series; the argument must be nilpotent.
[[nodiscard]] SparseMatrix analytic_apply(const AnalyticFnSpec& f, const SparseMatrix& m);

}  // namespace twistlab
