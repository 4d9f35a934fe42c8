#include "mmc/qmatrix.hpp"

#include "mmc/error.hpp"

#include <utility>

namespace mmc {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<RatVec>& rows, size_t cols) {
    QMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw MmError(ErrorCode::DimensionMismatch, "from_rows: ragged input");
        for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<RatVec>& columns, size_t rows) {
    QMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw MmError(ErrorCode::DimensionMismatch, "from_columns: ragged input");
        for (size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

RatVec QMatrix::row(size_t r) const {
    return RatVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVec QMatrix::column(size_t c) const {
    RatVec out(rows_);
    for (size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void QMatrix::append_row(const RatVec& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw MmError(ErrorCode::DimensionMismatch, "append_row: length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

RatVec QMatrix::apply(const RatVec& v) const {
    if (v.size() != cols_) throw MmError(ErrorCode::DimensionMismatch, "apply: length mismatch");
    RatVec out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        Rat s = 0;
        for (size_t c = 0; c < cols_; ++c) {
            const Rat& a = (*this)(r, c);
            if (sgn(a) != 0 && sgn(v[c]) != 0) s += a * v[c];
        }
        out[r] = s;
    }
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (cols_ != other.rows_) throw MmError(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    QMatrix out(rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (size_t j = 0; j < other.cols_; ++j) {
                const Rat& b = other(k, j);
                if (sgn(b) != 0) out(i, j) += a * b;
            }
        }
    }
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

namespace {

// Fraction-free elimination state. Rows are scaled to integers first; the
// accumulated scale and row-swap sign are kept so the determinant can be recovered.
struct BareissResult {
    std::vector<std::vector<Int>> rows;  // echelon rows (first `pivot_cols.size()` are nonzero)
    std::vector<size_t> pivot_cols;
    Int last_pivot = 1;
    Rat scale = 1;  // det(original) = det(scaled) / scale
    int swap_sign = 1;
};

BareissResult bareiss(const QMatrix& m) {
    BareissResult res;
    const size_t nr = m.rows();
    const size_t nc = m.cols();
    res.rows.assign(nr, std::vector<Int>(nc));
    for (size_t r = 0; r < nr; ++r) {
        Int l = 1;
        for (size_t c = 0; c < nc; ++c) {
            const Rat& x = m(r, c);
            if (sgn(x) != 0 && x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        for (size_t c = 0; c < nc; ++c) {
            const Rat& x = m(r, c);
            if (sgn(x) != 0) res.rows[r][c] = x.get_num() * (l / x.get_den());
        }
        res.scale *= Rat(l);
    }
    auto& a = res.rows;
    Int prev = 1;
    size_t pr = 0;
    for (size_t c = 0; c < nc && pr < nr; ++c) {
        size_t piv = nr;
        for (size_t i = pr; i < nr; ++i) {
            if (sgn(a[i][c]) != 0) {
                piv = i;
                break;
            }
        }
        if (piv == nr) continue;
        if (piv != pr) {
            std::swap(a[piv], a[pr]);
            res.swap_sign = -res.swap_sign;
        }
        const Int p = a[pr][c];
        const bool unit_prev = (prev == 1);
        for (size_t i = pr + 1; i < nr; ++i) {
            auto& row = a[i];
            const Int f = row[c];
            const bool f_zero = sgn(f) == 0;
            for (size_t j = c + 1; j < nc; ++j) {
                const bool rz = sgn(row[j]) == 0;
                const bool kz = f_zero || sgn(a[pr][j]) == 0;
                if (rz && kz) continue;
                Int v;
                if (rz) {
                    v = -f * a[pr][j];
                } else if (kz) {
                    v = p * row[j];
                } else {
                    v = p * row[j] - f * a[pr][j];
                }
                if (!unit_prev) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                row[j] = std::move(v);
            }
            row[c] = 0;
        }
        prev = p;
        res.pivot_cols.push_back(c);
        ++pr;
    }
    res.last_pivot = prev;
    return res;
}

}  // namespace

RowEchelon row_reduce(const QMatrix& m) {
    BareissResult b = bareiss(m);
    const size_t rank = b.pivot_cols.size();
    const size_t nc = m.cols();
    RowEchelon out;
    out.pivot_cols = b.pivot_cols;
    out.rref = QMatrix(rank, nc);
    for (size_t r = 0; r < rank; ++r) {
        const Int& p = b.rows[r][b.pivot_cols[r]];
        for (size_t c = 0; c < nc; ++c) {
            if (sgn(b.rows[r][c]) != 0) {
                Rat v(b.rows[r][c], p);
                v.canonicalize();
                out.rref(r, c) = v;
            }
        }
    }
    // back-substitution, bottom to top
    for (size_t r = rank; r-- > 0;) {
        const size_t pc = out.pivot_cols[r];
        for (size_t i = 0; i < r; ++i) {
            Rat f = out.rref(i, pc);
            if (sgn(f) == 0) continue;
            for (size_t c = pc; c < nc; ++c) {
                const Rat& v = out.rref(r, c);
                if (sgn(v) != 0) out.rref(i, c) -= f * v;
            }
        }
    }
    return out;
}

size_t mat_rank(const QMatrix& m) { return bareiss(m).pivot_cols.size(); }

Rat mat_det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw MmError(ErrorCode::DimensionMismatch, "det of non-square matrix");
    if (m.rows() == 0) return 1;
    BareissResult b = bareiss(m);
    if (b.pivot_cols.size() < m.rows()) return 0;
    Rat d(b.last_pivot);
    d *= b.swap_sign;
    d /= b.scale;
    return d;
}

std::optional<QMatrix> mat_inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw MmError(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    const size_t n = m.rows();
    QMatrix aug(n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    RowEchelon e = row_reduce(aug);
    if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    QMatrix inv(n, n);
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
    return inv;
}

std::vector<RatVec> mat_kernel(const QMatrix& m) {
    RowEchelon e = row_reduce(m);
    const size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (size_t pc : e.pivot_cols) is_pivot[pc] = true;
    std::vector<RatVec> basis;
    for (size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(nc);
        v[free] = 1;
        for (size_t r = 0; r < e.rank(); ++r) {
            const Rat& x = e.rref(r, free);
            if (sgn(x) != 0) v[e.pivot_cols[r]] = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> mat_solve(const QMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw MmError(ErrorCode::DimensionMismatch, "solve: rhs length mismatch");
    const size_t nc = m.cols();
    QMatrix aug(m.rows(), nc + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < nc; ++c) aug(r, c) = m(r, c);
        aug(r, nc) = b[r];
    }
    RowEchelon e = row_reduce(aug);
    if (e.rank() > 0 && e.pivot_cols.back() == nc) return std::nullopt;
    RatVec x(nc);
    for (size_t r = 0; r < e.rank(); ++r) x[e.pivot_cols[r]] = e.rref(r, nc);
    return x;
}

size_t vectors_rank(const std::vector<RatVec>& vectors, size_t dim) {
    if (vectors.empty()) return 0;
    return mat_rank(QMatrix::from_rows(vectors, dim));
}

}  // namespace mmc

namespace mmc {

RatVec SpanBuilder::reduce(const RatVec& v) const {
    if (v.size() != dim_) throw MmError(ErrorCode::DimensionMismatch, "span vector has wrong length");
    RatVec r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        const size_t p = pivots_[i];
        if (sgn(r[p]) == 0) continue;
        const Rat c = r[p];
        const RatVec& row = rows_[i];
        for (size_t j = p; j < dim_; ++j) {
            if (sgn(row[j]) != 0) r[j] -= c * row[j];
        }
    }
    return r;
}

bool SpanBuilder::contains(const RatVec& v) const { return is_zero(reduce(v)); }

bool SpanBuilder::add(const RatVec& v) {
    RatVec r = reduce(v);
    size_t p = 0;
    while (p < dim_ && sgn(r[p]) == 0) ++p;
    if (p == dim_) return false;
    const Rat inv = 1 / r[p];
    for (size_t j = p; j < dim_; ++j) r[j] *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
}

}  // namespace mmc
