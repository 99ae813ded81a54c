#include "twistlab/tensor.hpp"

#include <string>
#include <vector>

#include "twistlab/errors.hpp"

namespace twistlab {

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    SparseBuilder out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        auto ra = a.row(i);
        for (std::size_t k = 0; k < db; ++k) {
            auto rb = b.row(k);
            for (std::size_t p = 0; p < ra.cols.size(); ++p) {
                const auto base = static_cast<std::uint32_t>(ra.cols[p] * db);
                for (std::size_t q = 0; q < rb.cols.size(); ++q)
                    out.push(base + rb.cols[q], ra.values[p] * rb.values[q]);
            }
            out.end_row();
        }
    }
    return std::move(out).finish();
}

SparseMatrix embed_leg(const SparseMatrix& m, int leg, int legs) {
    if (legs < 1 || leg < 1 || leg > legs)
        throw LegOutOfRange("leg " + std::to_string(leg) + " of " + std::to_string(legs));
    const auto id = SparseMatrix::identity(m.dim());
    SparseMatrix out = leg == 1 ? m : id;
    for (int k = 2; k <= legs; ++k) out = kron(out, k == leg ? m : id);
    return out;
}

SparseMatrix permute_legs(const SparseMatrix& m, std::size_t leg_dim, std::span<const int> dest) {
    const std::size_t legs = dest.size();
    std::size_t total = 1;
    for (std::size_t k = 0; k < legs; ++k) total *= leg_dim;
    if (total != m.dim()) throw DimensionMismatch("permute_legs: leg layout does not match dim");
    std::vector<std::size_t> stride(legs);
    for (std::size_t k = 0; k < legs; ++k) {
        std::size_t s = 1;
        for (std::size_t j = k + 1; j < legs; ++j) s *= leg_dim;
        stride[k] = s;
    }
    auto map_index = [&](std::size_t idx0) {
        std::size_t out = 0;
        for (std::size_t k = 0; k < legs; ++k) {
            std::size_t digit = (idx0 / stride[k]) % leg_dim;
            out += digit * stride[static_cast<std::size_t>(dest[k])];
        }
        return out;
    };
    std::vector<Entry> entries;
    entries.reserve(m.nnz());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        auto rv = m.row(r);
        const std::size_t nr = map_index(r);
        for (std::size_t p = 0; p < rv.cols.size(); ++p)
            entries.push_back(Entry{nr + 1, map_index(rv.cols[p]) + 1, rv.values[p]});
    }
    return SparseMatrix::from_entries(m.dim(), std::move(entries));
}

SparseMatrix swap_legs(const SparseMatrix& m, std::size_t leg_dim) {
    const int dest[2] = {1, 0};
    return permute_legs(m, leg_dim, dest);
}

}  // namespace twistlab
