#include "mmc/resultant.hpp"

#include "mmc/error.hpp"

namespace mmc {

std::optional<Rat> macaulay_resultant(const std::vector<MPoly>& fs) {
    const size_t n = fs.size();
    if (n == 0) throw MmError(ErrorCode::InvalidArgument, "resultant of an empty system");
    std::vector<int> deg(n);
    int D = 1;
    for (size_t i = 0; i < n; ++i) {
        if (fs[i].nvars() != n) throw MmError(ErrorCode::DimensionMismatch, "resultant needs n polynomials in n variables");
        if (fs[i].is_zero() || !fs[i].is_homogeneous() || fs[i].degree() < 1)
            throw MmError(ErrorCode::InvalidArgument, "resultant needs nonconstant homogeneous polynomials");
        deg[i] = fs[i].degree();
        D += deg[i] - 1;
    }
    auto basis = MonomialBasis::get(n, D);
    const size_t N = basis->size();
    QMatrix M(N, N);
    std::vector<size_t> extraneous;
    for (size_t r = 0; r < N; ++r) {
        const Monomial& m = (*basis)[r];
        int first = -1, divisible = 0;
        for (size_t i = 0; i < n; ++i) {
            if (m[i] >= deg[i]) {
                if (first < 0) first = static_cast<int>(i);
                ++divisible;
            }
        }
        Monomial q = m;
        q[static_cast<size_t>(first)] -= deg[static_cast<size_t>(first)];
        RatVec row = basis->coords(MPoly::term(q, 1) * fs[static_cast<size_t>(first)]);
        for (size_t c = 0; c < N; ++c) M(r, c) = row[c];
        if (divisible >= 2) extraneous.push_back(r);
    }
    Rat den = 1;
    if (!extraneous.empty()) {
        QMatrix Mp(extraneous.size(), extraneous.size());
        for (size_t i = 0; i < extraneous.size(); ++i)
            for (size_t j = 0; j < extraneous.size(); ++j) Mp(i, j) = M(extraneous[i], extraneous[j]);
        den = mat_det(Mp);
        if (sgn(den) == 0) return std::nullopt;
    }
    return mat_det(M) / den;
}

Rat resultant(const std::vector<MPoly>& fs) {
    if (auto r = macaulay_resultant(fs)) return *r;
    const size_t n = fs.size();
    // upper times lower unitriangular matrices with small entries: determinant 1
    for (int seed = 1; seed <= 8; ++seed) {
        QMatrix U = QMatrix::identity(n), L = QMatrix::identity(n);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                const long v = static_cast<long>((i * 7 + j * 3 + static_cast<size_t>(seed) * 5) % 5) - 2;
                if (j > i) U(i, j) = v;
                if (j < i) L(i, j) = v + seed;
            }
        }
        QMatrix g = U * L;
        std::vector<MPoly> moved;
        for (const auto& f : fs) moved.push_back(f.substitute_linear(g));
        if (auto r = macaulay_resultant(moved)) return *r;
    }
    throw MmError(ErrorCode::InternalError, "Macaulay quotient degenerate in every tried coordinate system");
}

}  // namespace mmc
