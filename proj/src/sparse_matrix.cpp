#include "twistlab/sparse_matrix.hpp"

#include <algorithm>
#include <string>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

void require_same_dim(const SparseMatrix& a, const SparseMatrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
}

// Merges two sorted rows with coefficient sign on the right operand.
template <bool Subtract>
SparseMatrix merge(const SparseMatrix& a, const SparseMatrix& b) {
    require_same_dim(a, b, Subtract ? "subtract" : "add");
    SparseBuilder out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        auto ra = a.row(r);
        auto rb = b.row(r);
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < ra.cols.size() || j < rb.cols.size()) {
            if (j == rb.cols.size() || (i < ra.cols.size() && ra.cols[i] < rb.cols[j])) {
                out.push(ra.cols[i], ra.values[i]);
                ++i;
            } else if (i == ra.cols.size() || rb.cols[j] < ra.cols[i]) {
                out.push(rb.cols[j], Subtract ? -rb.values[j] : rb.values[j]);
                ++j;
            } else {
                Rational v = ra.values[i];
                if constexpr (Subtract)
                    v -= rb.values[j];
                else
                    v += rb.values[j];
                if (!v.is_zero()) out.push(ra.cols[i], std::move(v));
                ++i;
                ++j;
            }
        }
        out.end_row();
    }
    return std::move(out).finish();
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t dim) : dim_(dim), row_ptr_(dim + 1, 0) {
    if (dim == 0) throw DimensionMismatch("matrix dimension must be positive");
}

SparseMatrix SparseMatrix::identity(std::size_t dim) {
    SparseBuilder b(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        b.push(static_cast<std::uint32_t>(r), Rational(1));
        b.end_row();
    }
    return std::move(b).finish();
}

SparseMatrix SparseMatrix::elementary(std::size_t dim, std::size_t row, std::size_t col) {
    return from_entries(dim, {Entry{row, col, Rational(1)}});
}

SparseMatrix SparseMatrix::diagonal(std::span<const Rational> diag) {
    SparseBuilder b(diag.size());
    for (std::size_t r = 0; r < diag.size(); ++r) {
        if (!diag[r].is_zero()) b.push(static_cast<std::uint32_t>(r), diag[r]);
        b.end_row();
    }
    return std::move(b).finish();
}

SparseMatrix SparseMatrix::from_entries(std::size_t dim, std::vector<Entry> entries) {
    for (const auto& e : entries) {
        if (e.row < 1 || e.row > dim || e.col < 1 || e.col > dim)
            throw IndexOutOfRange("entry (" + std::to_string(e.row) + "," + std::to_string(e.col) +
                                  ") outside dim " + std::to_string(dim));
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return x.row != y.row ? x.row < y.row : x.col < y.col;
    });
    SparseBuilder b(dim);
    std::size_t k = 0;
    for (std::size_t r = 1; r <= dim; ++r) {
        while (k < entries.size() && entries[k].row == r) {
            std::size_t c = entries[k].col;
            Rational v = entries[k].value;
            ++k;
            while (k < entries.size() && entries[k].row == r && entries[k].col == c) {
                v += entries[k].value;
                ++k;
            }
            if (!v.is_zero()) b.push(static_cast<std::uint32_t>(c - 1), std::move(v));
        }
        b.end_row();
    }
    return std::move(b).finish();
}

bool SparseMatrix::is_identity() const {
    if (nnz() != dim_) return false;
    for (std::size_t r = 0; r < dim_; ++r) {
        if (row_ptr_[r + 1] - row_ptr_[r] != 1) return false;
        if (cols_[row_ptr_[r]] != r || !vals_[row_ptr_[r]].is_one()) return false;
    }
    return true;
}

bool SparseMatrix::is_scalar(Rational& c) const {
    if (is_zero()) {
        c = Rational(0);
        return true;
    }
    if (nnz() != dim_) return false;
    const Rational& first = vals_[0];
    for (std::size_t r = 0; r < dim_; ++r) {
        if (row_ptr_[r + 1] - row_ptr_[r] != 1) return false;
        if (cols_[row_ptr_[r]] != r || !(vals_[row_ptr_[r]] == first)) return false;
    }
    c = first;
    return true;
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
    if (row < 1 || row > dim_ || col < 1 || col > dim_) throw IndexOutOfRange("at()");
    auto rv = this->row(row - 1);
    auto it = std::lower_bound(rv.cols.begin(), rv.cols.end(), static_cast<std::uint32_t>(col - 1));
    if (it == rv.cols.end() || *it != col - 1) return Rational(0);
    return rv.values[static_cast<std::size_t>(it - rv.cols.begin())];
}

SparseMatrix::RowView SparseMatrix::row(std::size_t r0) const {
    std::size_t b = row_ptr_[r0];
    std::size_t e = row_ptr_[r0 + 1];
    return {std::span<const std::uint32_t>(cols_.data() + b, e - b),
            std::span<const Rational>(vals_.data() + b, e - b)};
}

std::vector<Entry> SparseMatrix::entries() const {
    std::vector<Entry> out;
    out.reserve(nnz());
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
            out.push_back(Entry{r + 1, std::size_t{cols_[k]} + 1, vals_[k]});
    return out;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& rhs) { return *this = merge<false>(*this, rhs); }

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& rhs) { return *this = merge<true>(*this, rhs); }

SparseMatrix& SparseMatrix::operator*=(const Rational& c) {
    if (c.is_zero()) return *this = SparseMatrix(dim_);
    for (auto& v : vals_) v *= c;
    return *this;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return merge<false>(a, b); }

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return merge<true>(a, b); }

SparseMatrix operator-(const SparseMatrix& a) {
    SparseMatrix r = a;
    for (auto& v : r.vals_) v = -v;
    return r;
}

SparseMatrix operator*(const Rational& c, const SparseMatrix& a) {
    SparseMatrix r = a;
    r *= c;
    return r;
}

// Gustavson's row-wise product with a dense accumulator.
SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    require_same_dim(a, b, "multiply");
    const std::size_t n = a.dim();
    std::vector<Rational> acc(n);
    std::vector<std::uint32_t> stamp(n, 0);
    std::vector<std::uint32_t> touched;
    SparseBuilder out(n);
    for (std::size_t r = 0; r < n; ++r) {
        touched.clear();
        const auto mark = static_cast<std::uint32_t>(r + 1);
        auto ra = a.row(r);
        for (std::size_t i = 0; i < ra.cols.size(); ++i) {
            auto rb = b.row(ra.cols[i]);
            const Rational& av = ra.values[i];
            for (std::size_t j = 0; j < rb.cols.size(); ++j) {
                std::uint32_t c = rb.cols[j];
                if (stamp[c] != mark) {
                    stamp[c] = mark;
                    touched.push_back(c);
                    acc[c] = av;
                    acc[c] *= rb.values[j];
                } else {
                    acc[c].add_product(av, rb.values[j]);
                }
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::uint32_t c : touched)
            if (!acc[c].is_zero()) out.push(c, std::move(acc[c]));
        out.end_row();
    }
    return std::move(out).finish();
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.dim_ == b.dim_ && a.row_ptr_ == b.row_ptr_ && a.cols_ == b.cols_ && a.vals_ == b.vals_;
}

SparseBuilder::SparseBuilder(std::size_t dim) : m_(dim) {
    m_.row_ptr_.clear();
    m_.row_ptr_.push_back(0);
}

void SparseBuilder::push(std::uint32_t col, Rational value) {
    m_.cols_.push_back(col);
    m_.vals_.push_back(std::move(value));
}

void SparseBuilder::end_row() { m_.row_ptr_.push_back(m_.cols_.size()); }

SparseMatrix SparseBuilder::finish() && {
    while (m_.row_ptr_.size() < m_.dim_ + 1) m_.row_ptr_.push_back(m_.cols_.size());
    return std::move(m_);
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

std::size_t residual_nnz(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("residual_nnz");
    if (a == b) return 0;
    return (a - b).nnz();
}

}  // namespace twistlab
