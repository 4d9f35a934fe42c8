#include "mmc/cubic.hpp"

#include "mmc/error.hpp"
#include "mmc/resultant.hpp"

#include <mutex>

namespace mmc {

namespace {

const MonomialBasis& cubic_monomials() { return *MonomialBasis::get(3, 3); }

/// Weight-(4,4,4) quartics in c1..c10 killed by every x_i d/dx_j, i != j.
MPoly compute_aronhold() {
    const auto& cubics = cubic_monomials();
    auto quartics = MonomialBasis::get(10, 4);
    std::vector<Monomial> unknowns;
    for (const auto& mu : quartics->monomials()) {
        int w[3] = {0, 0, 0};
        for (size_t k = 0; k < 10; ++k)
            for (size_t v = 0; v < 3; ++v) w[v] += mu[k] * cubics[k][v];
        if (w[0] == 4 && w[1] == 4 && w[2] == 4) unknowns.push_back(mu);
    }
    std::map<std::pair<int, Monomial>, size_t> row_of;
    std::vector<std::vector<std::pair<size_t, Rat>>> cols(unknowns.size());
    for (size_t i = 0; i < 3; ++i) {
        for (size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                MPoly mu = MPoly::term(unknowns[u], 1);
                MPoly image(10);
                for (size_t k = 0; k < 10; ++k) {
                    const int ej = cubics[k][j];
                    if (ej == 0) continue;
                    Monomial target = cubics[k];
                    target[j] -= 1;
                    target[i] += 1;
                    const size_t kp = cubics.index(target);
                    image += mu.derivative(kp) * MPoly::variable(10, k) * Rat(ej);
                }
                for (const auto& [mono, c] : image.terms()) {
                    auto key = std::make_pair(static_cast<int>(3 * i + j), mono);
                    auto it = row_of.emplace(key, row_of.size()).first;
                    cols[u].emplace_back(it->second, c);
                }
            }
        }
    }
    QMatrix M(row_of.size(), unknowns.size());
    for (size_t u = 0; u < cols.size(); ++u)
        for (const auto& [r, c] : cols[u]) M(r, u) += c;
    auto ker = mat_kernel(M);
    if (ker.size() != 1) throw MmError(ErrorCode::InternalError, "degree-4 invariants of cubics are not one-dimensional");
    MPoly A(10);
    for (size_t u = 0; u < unknowns.size(); ++u) A.add_term(unknowns[u], ker[0][u]);
    Monomial c5(10, 0);
    c5[4] = 4;
    const Rat s = A.coeff(c5);
    if (sgn(s) == 0) throw MmError(ErrorCode::InternalError, "Aronhold invariant lacks c5^4");
    return A * (Rat(1) / s);
}

EpsScalar pow_eps(const EpsScalar& x, int k) {
    EpsScalar r(1);
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

TernaryCubic cubic_from_poly(const MPoly& p) {
    if (p.nvars() != 3 && p.nvars() != 4) throw MmError(ErrorCode::DimensionMismatch, "cubic needs variables x, y, z (and eps)");
    const auto& cubics = cubic_monomials();
    std::array<RatVec, 10> coeffs;
    for (const auto& [mono, c] : p.terms()) {
        Monomial xyz(mono.begin(), mono.begin() + 3);
        if (monomial_degree(xyz) != 3) throw MmError(ErrorCode::InvalidArgument, "polynomial is not a ternary cubic");
        const size_t k = cubics.index(xyz);
        const size_t e = p.nvars() == 4 ? static_cast<size_t>(mono[3]) : 0;
        if (coeffs[k].size() <= e) coeffs[k].resize(e + 1);
        coeffs[k][e] += c;
    }
    TernaryCubic out;
    bool any = false;
    for (size_t k = 0; k < 10; ++k) {
        out.c[k] = EpsScalar(UniPoly(coeffs[k]), UniPoly::constant(1));
        any = any || !out.c[k].is_zero();
    }
    if (!any) throw MmError(ErrorCode::InvalidArgument, "cubic is identically zero");
    return out;
}

RationalCubic cubic_at(const TernaryCubic& c, const Rat& eps) {
    RationalCubic r;
    for (size_t k = 0; k < 10; ++k) r[k] = c.c[k].eval(eps);
    return r;
}

MPoly cubic_poly(const RationalCubic& c) {
    MPoly p(3);
    for (size_t k = 0; k < 10; ++k) p.add_term(cubic_monomials()[k], c[k]);
    return p;
}

Rat cubic_discriminant(const RationalCubic& c) {
    MPoly f = cubic_poly(c);
    // Res(3x^2, 3y^2, 3z^2) = 3^12 for the Fermat cubic, whose discriminant is -3^9
    return resultant({f.derivative(0), f.derivative(1), f.derivative(2)}) * Rat(-1, 27);
}

const MPoly& aronhold_polynomial() {
    static std::once_flag once;
    static MPoly A;
    std::call_once(once, [] { A = compute_aronhold(); });
    return A;
}

Rat aronhold(const RationalCubic& c) { return aronhold_polynomial().eval(RatVec(c.begin(), c.end())); }

CubicInvariants cubic_invariants(const TernaryCubic& c) {
    // clear denominators: Delta(D c) = D^12 Delta(c)
    UniPoly D = UniPoly::constant(1);
    for (const auto& x : c.c) {
        const UniPoly& den = x.denominator();
        D = divmod(D * den, gcd(D, den)).first;
    }
    std::array<UniPoly, 10> num;
    int k = 0;
    for (size_t i = 0; i < 10; ++i) {
        EpsScalar s = c.c[i] * EpsScalar(D, UniPoly::constant(1));
        num[i] = s.numerator() * (Rat(1) / s.denominator().leading());
        k = std::max(k, num[i].degree());
    }
    const int npts = 12 * k + 1;
    RatVec xs, ys;
    for (int t = 0; t <= npts; ++t) {
        RationalCubic r;
        for (size_t i = 0; i < 10; ++i) r[i] = num[i].eval(Rat(t));
        xs.push_back(Rat(t));
        ys.push_back(cubic_discriminant(r));
    }
    UniPoly delta = interpolate(RatVec(xs.begin(), xs.end() - 1), RatVec(ys.begin(), ys.end() - 1));
    if (delta.eval(xs.back()) != ys.back()) throw MmError(ErrorCode::InternalError, "discriminant interpolation check failed");

    CubicInvariants inv;
    inv.discriminant = EpsScalar(delta, UniPoly::constant(1)) / pow_eps(EpsScalar(D, UniPoly::constant(1)), 12);
    EpsScalar a;
    for (const auto& [mono, coef] : aronhold_polynomial().terms()) {
        EpsScalar t(coef);
        for (size_t i = 0; i < 10; ++i) t *= pow_eps(c.c[i], mono[i]);
        a += t;
    }
    inv.aronhold = a;
    if (!inv.discriminant.is_zero()) {
        inv.j = pow_eps(a, 3) / inv.discriminant;
        inv.has_j = true;
    }
    return inv;
}

EpsScalar j_invariant(const TernaryCubic& c) {
    auto inv = cubic_invariants(c);
    if (!inv.has_j) throw MmError(ErrorCode::ZeroDiscriminant, "the cubic is singular");
    return inv.j;
}

const char* verdict_name(Genus1Verdict v) {
    switch (v) {
        case Genus1Verdict::MM: return "MM";
        case Genus1Verdict::NotMaximal: return "NotMaximal";
        case Genus1Verdict::NotMumford: return "NotMumford";
        case Genus1Verdict::NotBoth: return "NotBoth";
    }
    return "?";
}

Genus1Result genus1_mm_test(const TernaryCubic& c) {
    Genus1Result r;
    r.invariants = cubic_invariants(c);
    if (!r.invariants.has_j) throw MmError(ErrorCode::SingularCubic, "discriminant vanishes");
    r.discriminant_sign = eps_sign(r.invariants.discriminant);
    r.j_valuation = eps_val(r.invariants.j);
    const bool maximal = r.discriminant_sign > 0;
    const bool mumford = r.j_valuation < 0;
    if (maximal && mumford)
        r.verdict = Genus1Verdict::MM;
    else if (mumford)
        r.verdict = Genus1Verdict::NotMaximal;
    else if (maximal)
        r.verdict = Genus1Verdict::NotMumford;
    else
        r.verdict = Genus1Verdict::NotBoth;
    return r;
}

}  // namespace mmc
