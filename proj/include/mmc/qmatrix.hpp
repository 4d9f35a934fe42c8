#pragma once

#include "mmc/rational.hpp"

#include <optional>
#include <vector>

namespace mmc {

/// Dense rectangular matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(size_t n);
    static QMatrix from_rows(const std::vector<RatVec>& rows, size_t cols);
    static QMatrix from_columns(const std::vector<RatVec>& columns, size_t rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rat& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rat& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    RatVec row(size_t r) const;
    RatVec column(size_t c) const;
    void append_row(const RatVec& row);

    RatVec apply(const RatVec& v) const;
    QMatrix operator*(const QMatrix& other) const;
    QMatrix transposed() const;

    bool operator==(const QMatrix& other) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Reduced row echelon form; rows beyond rank are dropped.
struct RowEchelon {
    QMatrix rref;                     // rank x cols, pivot entries 1
    std::vector<size_t> pivot_cols;   // strictly increasing
    size_t rank() const { return pivot_cols.size(); }
};

/// Row reduction via fraction-free (Bareiss) elimination on integer-scaled rows,
/// followed by rational back-substitution.
RowEchelon row_reduce(const QMatrix& m);

size_t mat_rank(const QMatrix& m);
Rat mat_det(const QMatrix& m);
std::optional<QMatrix> mat_inverse(const QMatrix& m);

/// Basis of the right kernel, one vector per free column (unit entry there).
std::vector<RatVec> mat_kernel(const QMatrix& m);

/// Some x with m*x = b, or nullopt when b is outside the column space.
std::optional<RatVec> mat_solve(const QMatrix& m, const RatVec& b);

/// Rank of a list of equal-length vectors.
size_t vectors_rank(const std::vector<RatVec>& vectors, size_t dim);

}  // namespace mmc

namespace mmc {

/// Incrementally grown row space with membership tests.
class SpanBuilder {
public:
    explicit SpanBuilder(size_t dim) : dim_(dim) {}
    /// Adds v; returns true when it was independent of the current span.
    bool add(const RatVec& v);
    bool contains(const RatVec& v) const;
    /// Remainder of v after elimination against the current rows.
    RatVec reduce(const RatVec& v) const;
    size_t rank() const { return rows_.size(); }
    size_t dim() const { return dim_; }

private:
    size_t dim_;
    std::vector<RatVec> rows_;  // rows_[i] has a 1 at pivots_[i] and 0 at earlier pivots
    std::vector<size_t> pivots_;
};

}  // namespace mmc
