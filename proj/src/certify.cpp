#include "mmc/certify.hpp"

#include "mmc/error.hpp"
#include "mmc/groebner.hpp"
#include "mmc/cubic.hpp"
#include "mmc/resultant.hpp"

#include <functional>
#include <random>

namespace mmc {

std::vector<MPoly> DeformedIdeal::at(const Rat& eps) const {
    std::vector<MPoly> out;
    for (size_t i = 0; i < base.size(); ++i) out.push_back(base[i] + first_order[i] * eps);
    return out;
}

MMDeformation mm_deformation(const GraphCurveModel& m, const AdaptedBasis& b, const RatVec& lambda) {
    const size_t E = m.graph.edge_count();
    if (lambda.size() != E) throw MmError(ErrorCode::DimensionMismatch, "need one coefficient per edge");
    for (size_t e = 0; e < E; ++e) {
        if (sgn(lambda[e]) <= 0)
            throw MmError(ErrorCode::NonPositiveCoefficient, "coefficient of edge " + std::to_string(e) + " is not positive");
    }
    CoverGraph cover = cover_graph(m.graph, m.pairing);
    if (!m.pairing_is_planar || cover.cycle_count() != static_cast<size_t>(m.genus) + 1)
        throw MmError(ErrorCode::NotPlanar, "model pairing is not a face double cover");
    MMDeformation out;
    RatVec sum(b.layout.total);
    for (size_t e = 0; e < E; ++e) sum = add(sum, scaled(tangent_coords(m, b.eta[e]), lambda[e]));
    out.tangent = tangent_from_coords(m, sum);
    out.ideal.base = m.generators;
    out.ideal.first_order = out.tangent.images;
    out.certificate.genus = m.nvars();
    out.certificate.pairing = m.pairing;
    out.certificate.cover_cycles = cover.cycle_count();
    out.certificate.lambda = lambda;
    return out;
}

const char* cone_status_name(ConeStatus s) {
    switch (s) {
        case ConeStatus::InCone: return "InCone";
        case ConeStatus::OnBoundary: return "OnBoundary";
        case ConeStatus::Outside: return "Outside";
    }
    return "?";
}

ConeCheck mm_cone_check(const GraphCurveModel& m, const AdaptedBasis& b, const TangentVector& t) {
    ConeCheck c;
    c.decomposition = decompose(m, b, t);
    std::vector<size_t> zero, negative;
    for (size_t e = 0; e < c.decomposition.lambda.size(); ++e) {
        const int s = sgn(c.decomposition.lambda[e]);
        if (s == 0) zero.push_back(e);
        if (s < 0) negative.push_back(e);
    }
    if (!negative.empty()) {
        c.status = ConeStatus::Outside;
        c.edges = negative;
    } else if (!zero.empty()) {
        c.status = ConeStatus::OnBoundary;
        c.edges = zero;
    }
    return c;
}

namespace {

UniPoly mod(const UniPoly& a, const UniPoly& p) { return divmod(a, p).second; }

/// Inverse of a modulo p when gcd(a, p) = 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& p) {
    UniPoly r0 = p, r1 = mod(a, p);
    UniPoly s0, s1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is a nonzero constant
    return mod(s0 * (Rat(1) / r0.leading()), p);
}

using UniMatrix = std::vector<std::vector<UniPoly>>;

/// Splits the roots of squarefree p by the rank of m at them: (factor, rank) pairs.
void rank_split(UniMatrix m, const UniPoly& p, size_t done, std::vector<std::pair<UniPoly, size_t>>& out) {
    for (auto& row : m)
        for (auto& x : row) x = mod(x, p);
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    size_t rank = done;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            UniPoly g = gcd(m[i][c], p);
            if (g.degree() == 0) {
                piv = i;
                break;
            }
            // the entry vanishes at the roots of g only: treat both parts separately
            UniPoly other = divmod(p, g).first.monic();
            UniMatrix rest(m.begin() + static_cast<long>(r), m.end());
            rank_split(rest, g, rank, out);
            rank_split(rest, other, rank, out);
            return;
        }
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        UniPoly inv = inverse_mod(m[r][c], p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            UniPoly f = mod(m[i][c] * inv, p);
            for (size_t k = c; k < cols; ++k) m[i][k] = mod(m[i][k] - f * m[r][k], p);
        }
        ++r;
        ++rank;
    }
    out.emplace_back(p, rank);
}

UniPoly uni_pow(const UniPoly& x, int k, const UniPoly& p) {
    UniPoly r = UniPoly::constant(1);
    for (int i = 0; i < k; ++i) r = mod(r * x, p);
    return r;
}

UniPoly eval_mod(const MPoly& f, const std::vector<UniPoly>& xs, const UniPoly& p) {
    UniPoly s;
    for (const auto& [mono, c] : f.terms()) {
        UniPoly t = UniPoly::constant(c);
        for (size_t i = 0; i < mono.size(); ++i) {
            if (mono[i] > 0) t = mod(t * uni_pow(xs[i], mono[i], p), p);
        }
        s += t;
    }
    return mod(s, p);
}

}  // namespace

SmoothnessReport spot_smoothness(const std::vector<MPoly>& gens, const std::vector<RatVec>& points) {
    SmoothnessReport rep;
    if (gens.empty()) return rep;
    const size_t n = gens[0].nvars();
    for (const auto& pt : points) {
        bool on = true;
        for (const auto& f : gens) on = on && sgn(poly_eval(f, pt)) == 0;
        if (!on) {
            rep.notes.push_back("point is not on the curve");
            continue;
        }
        ++rep.points;
        QMatrix J(gens.size(), n);
        for (size_t r = 0; r < gens.size(); ++r)
            for (size_t c = 0; c < n; ++c) J(r, c) = gens[r].derivative(c).eval(pt);
        const size_t rank = mat_rank(J);
        if (rank != n - 2) {
            ++rep.singular;
            std::string s = "Jacobian rank " + std::to_string(rank) + " at (";
            for (size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + to_string(pt[i]);
            rep.notes.push_back(s + ")");
        }
    }
    return rep;
}

SmoothnessReport spot_smoothness_sliced(const std::vector<MPoly>& gens, int slices, uint32_t seed) {
    SmoothnessReport rep;
    if (gens.empty()) return rep;
    const size_t n = gens[0].nvars();
    if (n < 3) throw MmError(ErrorCode::InvalidArgument, "need at least three homogeneous variables");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    const size_t k = n - 2;  // affine variables after slicing and dehomogenizing
    std::vector<std::vector<MPoly>> jac(gens.size());
    for (size_t r = 0; r < gens.size(); ++r)
        for (size_t c = 0; c < n; ++c) jac[r].push_back(gens[r].derivative(c));

    for (int s = 0; s < slices; ++s) {
        // x = A * (1, y_1, ..., y_k): a random plane of dimension k+1 = n-1 in coordinates
        QMatrix A(n, k + 1);
        do {
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j <= k; ++j) A(i, j) = coef(rng);
        } while (mat_rank(A) != k + 1);
        std::vector<MPoly> images;
        for (size_t i = 0; i < n; ++i) {
            MPoly x = MPoly::constant(k, A(i, 0));
            for (size_t j = 1; j <= k; ++j) x += MPoly::variable(k, j - 1) * A(i, j);
            images.push_back(x);
        }
        std::vector<MPoly> sliced;
        for (const auto& f : gens) sliced.push_back(f.substitute(images));
        auto gb = groebner_lex(sliced);
        if (gb.size() == 1 && gb[0].degree() == 0) {
            rep.notes.push_back("slice " + std::to_string(s) + " misses the variety");
            continue;
        }
        auto shape = shape_basis(gb);
        if (!shape) {
            rep.notes.push_back("slice " + std::to_string(s) + " not in shape position; skipped");
            continue;
        }
        UniPoly p = shape->p.monic();
        UniPoly sq = squarefree_part(p);
        if (sq.degree() != p.degree()) rep.notes.push_back("slice " + std::to_string(s) + " meets the curve non-transversally");
        // point coordinates as polynomials in t = y_k
        std::vector<UniPoly> y = shape->r;
        y.push_back(UniPoly::identity());
        std::vector<UniPoly> x;
        for (size_t i = 0; i < n; ++i) {
            UniPoly xi = UniPoly::constant(A(i, 0));
            for (size_t j = 1; j <= k; ++j) xi += y[j - 1] * A(i, j);
            x.push_back(mod(xi, sq));
        }
        UniMatrix J(gens.size(), std::vector<UniPoly>(n));
        for (size_t r = 0; r < gens.size(); ++r)
            for (size_t c = 0; c < n; ++c) J[r][c] = eval_mod(jac[r][c], x, sq);
        std::vector<std::pair<UniPoly, size_t>> parts;
        rank_split(J, sq, 0, parts);
        for (const auto& [factor, rank] : parts) {
            const size_t cnt = static_cast<size_t>(factor.degree());
            rep.points += cnt;
            if (rank != n - 2) {
                rep.singular += cnt;
                rep.notes.push_back("slice " + std::to_string(s) + ": " + std::to_string(cnt) + " points with Jacobian rank " +
                                    std::to_string(rank));
            }
        }
    }
    return rep;
}

UniPoly quartic_family_discriminant(const EpsPoly& family) {
    int K = -1;
    for (size_t k = 0; k < family.coeffs.size(); ++k) {
        const MPoly& c = family.coeffs[k];
        if (c.is_zero()) continue;
        if (c.nvars() != 3 || !c.is_homogeneous() || c.degree() != 4)
            throw MmError(ErrorCode::DegenerateFamily, "family is not a plane quartic");
        K = static_cast<int>(k);
    }
    if (K < 0) throw MmError(ErrorCode::DegenerateFamily, "family is zero");
    // the resultant has degree 27 in the coefficients
    const int npts = 27 * K + 1;
    RatVec xs, ys;
    for (int t = 0; t <= npts; ++t) {
        const Rat e(t);
        MPoly F(3);
        Rat pw = 1;
        for (const auto& c : family.coeffs) {
            if (!c.is_zero()) F += c * pw;
            pw *= e;
        }
        xs.push_back(e);
        ys.push_back(resultant({F.derivative(0), F.derivative(1), F.derivative(2)}));
    }
    UniPoly d = interpolate(RatVec(xs.begin(), xs.end() - 1), RatVec(ys.begin(), ys.end() - 1));
    if (d.eval(xs.back()) != ys.back()) throw MmError(ErrorCode::InternalError, "discriminant interpolation check failed");
    if (d.is_zero()) throw MmError(ErrorCode::DegenerateFamily, "every member of the family is singular");
    return d;
}

namespace {

MPoly eps_value(const EpsPoly& f, const Rat& e) {
    MPoly out(f.coeffs.empty() ? 0 : f.coeffs[0].nvars());
    Rat pw(1);
    for (const auto& c : f.coeffs) {
        if (!c.is_zero()) out += c * pw;
        pw *= e;
    }
    return out;
}

int eps_degree(const EpsPoly& f) {
    int d = -1;
    for (size_t k = 0; k < f.coeffs.size(); ++k)
        if (!f.coeffs[k].is_zero()) d = static_cast<int>(k);
    return d;
}

/// Coefficient of w^j (w the last of four variables) as a polynomial in x, y, z.
MPoly w_coefficient(const MPoly& p, int j) {
    MPoly out(3);
    for (const auto& [m, c] : p.terms())
        if (m[3] == j) out.add_term(Monomial(m.begin(), m.begin() + 3), c);
    return out;
}

/// Discriminant of the binary sextic Res_z(C, D) after the coordinate change x -> U x. Vanishes when
/// C and D touch, and also when two of their common points are collinear with U(0:0:1).
Rat projected_tangency(const MPoly& C, const MPoly& D, const QMatrix& U) {
    const MPoly c = C.substitute_linear(U);
    const MPoly d = D.substitute_linear(U);
    RatVec ts, rs;
    for (int i = 0; i <= 6; ++i) {
        const Rat t(i);
        std::vector<MPoly> images{MPoly::constant(1, Rat(1)), MPoly::constant(1, t), MPoly::variable(1, 0)};
        const MPoly cz = c.substitute(images);
        const MPoly dz = d.substitute(images);
        // Sylvester matrix with formal degrees 3 and 2
        QMatrix S(5, 5);
        for (int r = 0; r < 2; ++r)
            for (int k = 0; k <= 3; ++k) S(r, r + k) = cz.coeff(Monomial{3 - k});
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k <= 2; ++k) S(2 + r, r + k) = dz.coeff(Monomial{2 - k});
        ts.push_back(t);
        rs.push_back(mat_det(S));
    }
    const UniPoly r = interpolate(ts, rs);
    MPoly R(2);
    for (int i = 0; i <= 6; ++i) {
        if (sgn(r.coeff(i)) != 0) R.add_term(Monomial{6 - i, i}, r.coeff(i));
    }
    if (R.is_zero()) return Rat(0);
    return resultant({R.derivative(0), R.derivative(1)});
}

/// Interpolates a polynomial of degree at most `deg` from its values, with one extra check point.
UniPoly interpolate_checked(const std::function<Rat(const Rat&)>& f, int deg, const char* what) {
    RatVec xs, ys;
    for (int k = 0; k <= deg; ++k) {
        xs.push_back(Rat(k + 1));
        ys.push_back(f(xs.back()));
    }
    UniPoly p = interpolate(xs, ys);
    const Rat check(-1, 3);
    if (p.eval(check) != f(check))
        throw MmError(ErrorCode::InternalError, std::string(what) + ": interpolation check failed");
    return p;
}

}  // namespace

UniPoly double_cover_discriminant(const EpsPoly& quadric, const EpsPoly& cubic) {
    for (const auto* f : {&quadric, &cubic}) {
        if (eps_degree(*f) < 0 || f->coeffs[0].nvars() != 4)
            throw MmError(ErrorCode::DegenerateFamily, "expected polynomials in x, y, z, w");
    }
    MPoly a = w_coefficient(quadric.coeffs[0], 2);
    if (a.is_zero() || a.degree() != 0) throw MmError(ErrorCode::DegenerateFamily, "w^2 coefficient is not a nonzero constant");
    for (size_t k = 0; k < quadric.coeffs.size(); ++k) {
        const MPoly& q = quadric.coeffs[k];
        if (!q.is_zero() && (q.degree() != 2 || !q.is_homogeneous()))
            throw MmError(ErrorCode::DegenerateFamily, "first polynomial is not a quadric");
        if (k > 0 && !w_coefficient(q, 2).is_zero())
            throw MmError(ErrorCode::DegenerateFamily, "w^2 coefficient depends on eps");
    }
    for (const auto& c : cubic.coeffs) {
        if (c.is_zero()) continue;
        if (c.degree() != 3 || !c.is_homogeneous()) throw MmError(ErrorCode::DegenerateFamily, "second polynomial is not a cubic");
        for (const auto& [m, v] : c.terms())
            if (m[3] != 0) throw MmError(ErrorCode::DegenerateFamily, "cubic involves w");
    }
    const Rat a0 = a.coeff(Monomial{0, 0, 0});

    auto plane_cubic = [&](const Rat& e) { return w_coefficient(eps_value(cubic, e), 0); };
    auto branch_conic = [&](const Rat& e) {
        const MPoly q = eps_value(quadric, e);
        const MPoly B = w_coefficient(q, 1);
        return B * B - w_coefficient(q, 0) * (Rat(4) * a0);
    };

    const int dC = eps_degree(cubic);
    const int dD = 2 * eps_degree(quadric);
    // Res_z is of degree 2 in C and 3 in D; the sextic discriminant is of degree 10 in Res_z
    const int tangency_degree = 10 * (2 * dC + 3 * dD);

    QMatrix I(3, 3), U(3, 3);
    for (size_t i = 0; i < 3; ++i) I(i, i) = 1;
    const int u[3][3] = {{1, 0, 2}, {0, 1, -1}, {1, 1, 2}};  // det 1
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) U(i, j) = u[i][j];
    UniPoly tangency;
    for (const QMatrix* change : {&I, &U}) {
        UniPoly t = interpolate_checked(
            [&](const Rat& e) { return projected_tangency(plane_cubic(e), branch_conic(e), *change); }, tangency_degree,
            "tangency locus");
        if (t.is_zero()) throw MmError(ErrorCode::DegenerateFamily, "cubic and branch conic share a component");
        tangency = tangency.is_zero() ? t.monic() : gcd(tangency, t);
    }

    UniPoly singular = interpolate_checked(
        [&](const Rat& e) { return cubic_discriminant(cubic_at(cubic_from_poly(plane_cubic(e)), Rat(0))); }, 12 * dC,
        "cubic discriminant");
    if (singular.is_zero()) throw MmError(ErrorCode::DegenerateFamily, "plane cubic is singular for every eps");
    return singular * tangency;
}

}  // namespace mmc
