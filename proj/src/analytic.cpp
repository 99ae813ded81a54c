#include "twistlab/analytic.hpp"

#include <string>

#include "twistlab/errors.hpp"

namespace twistlab {

Rational AnalyticFnSpec::coefficient(unsigned k) const {
    switch (kind) {
        case Kind::exp:
            return Rational(1) / factorial(k);
        case Kind::log1p:
            if (k == 0) return Rational(0);
            return Rational(k % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(k));
        case Kind::pow1p:
            return binomial(exponent, k);
    }
    return Rational(0);
}

std::vector<SparseMatrix> nilpotent_powers(const SparseMatrix& m) {
    std::vector<SparseMatrix> powers;
    powers.push_back(SparseMatrix::identity(m.dim()));
    SparseMatrix p = m;
    while (!p.is_zero()) {
        if (powers.size() >= m.dim())
            throw NotNilpotent("m^" + std::to_string(m.dim()) + " != 0 (dim " + std::to_string(m.dim()) + ")");
        powers.push_back(p);
        p = p * m;
    }
    return powers;
}

unsigned nilpotency_index(const SparseMatrix& m) {
    if (m.is_zero()) return 1;
    return static_cast<unsigned>(nilpotent_powers(m).size());
}

SparseMatrix analytic_apply(const AnalyticFnSpec& f, const SparseMatrix& m) {
    auto powers = nilpotent_powers(m);
    SparseMatrix out(m.dim());
    for (unsigned k = 0; k < powers.size(); ++k) {
        Rational c = f.coefficient(k);
        if (!c.is_zero()) out += c * powers[k];
    }
    return out;
}

}  // namespace twistlab
