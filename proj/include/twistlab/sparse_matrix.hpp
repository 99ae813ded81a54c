#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "twistlab/rational.hpp"

namespace twistlab {

/// One stored entry, 1-based indices.
struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
};

/// Square sparse matrix over the rationals in compressed-row form.
///
/// Rows are sorted by column and never hold explicit zeros, so two matrices
/// are equal exactly when their arrays are equal. All public indices are
/// 1-based; tensor index (a, b) of a d-dimensional leg maps to (a-1)*d + b.
class SparseMatrix {
public:
    struct RowView {
        std::span<const std::uint32_t> cols;  // 0-based
        std::span<const Rational> values;
    };

    SparseMatrix() : SparseMatrix(1) {}
    explicit SparseMatrix(std::size_t dim);

    static SparseMatrix identity(std::size_t dim);
    static SparseMatrix elementary(std::size_t dim, std::size_t row, std::size_t col);
    static SparseMatrix diagonal(std::span<const Rational> diag);
    /// Duplicates are summed; zero results are dropped.
    static SparseMatrix from_entries(std::size_t dim, std::vector<Entry> entries);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t nnz() const noexcept { return cols_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return cols_.empty(); }
    [[nodiscard]] bool is_identity() const;

    [[nodiscard]] Rational at(std::size_t row, std::size_t col) const;
    [[nodiscard]] RowView row(std::size_t r0) const;  // 0-based
    /// Entries in row-major order, 1-based.
    [[nodiscard]] std::vector<Entry> entries() const;

    /// If this equals c*I returns true and sets c.
    [[nodiscard]] bool is_scalar(Rational& c) const;

    SparseMatrix& operator+=(const SparseMatrix& rhs);
    SparseMatrix& operator-=(const SparseMatrix& rhs);
    SparseMatrix& operator*=(const Rational& c);

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a);
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Rational& c, const SparseMatrix& a);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

private:
    friend class SparseBuilder;
    std::size_t dim_;
    std::vector<std::size_t> row_ptr_;
    std::vector<std::uint32_t> cols_;
    std::vector<Rational> vals_;
};

/// Row-by-row assembly for kernels that produce sorted rows.
class SparseBuilder {
public:
    explicit SparseBuilder(std::size_t dim);
    /// Appends to the current row; columns must be increasing, 0-based.
    void push(std::uint32_t col, Rational value);
    void end_row();
    [[nodiscard]] SparseMatrix finish() &&;

private:
    SparseMatrix m_;
};

[[nodiscard]] SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Number of stored entries in a - b; zero iff a == b.
[[nodiscard]] std::size_t residual_nnz(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace twistlab
