#include "mmc/tangent.hpp"

#include "mmc/error.hpp"

#include <algorithm>

namespace mmc {

namespace {

Monomial monomial_product(const Monomial& a, const Monomial& b) {
    Monomial m(a.size());
    for (size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
    return m;
}

/// Normal-form coordinates of every monomial of degree d.
std::vector<RatVec> monomial_nf_table(const GraphCurveModel& m, int d) {
    auto basis = MonomialBasis::get(m.nvars(), d);
    std::vector<RatVec> table;
    table.reserve(basis->size());
    for (const auto& mono : basis->monomials()) table.push_back(m.nf_coords(MPoly::term(mono, 1), d));
    return table;
}

/// Linear conditions on tangent coordinates expressing compatibility with the syzygies.
QMatrix hom_constraints(const GraphCurveModel& m, const TangentLayout& layout) {
    const size_t n = m.nvars();
    const size_t ngens = m.generators.size();
    QMatrix rows(0, layout.total);
    for (int D = m.min_generator_degree() + 1; D <= m.max_generator_degree() + 1; ++D) {
        auto target = MonomialBasis::get(n, D);
        struct Column {
            size_t gen;
            Monomial mult;
        };
        std::vector<Column> cols;
        std::vector<RatVec> vecs;
        for (size_t j = 0; j < ngens; ++j) {
            const int dj = layout.degrees[j];
            if (dj > D) continue;
            for (const auto& mu : MonomialBasis::get(n, D - dj)->monomials()) {
                cols.push_back({j, mu});
                vecs.push_back(target->coords(MPoly::term(mu, 1) * m.generators[j]));
            }
        }
        auto syz = mat_kernel(QMatrix::from_columns(vecs, target->size()));
        if (syz.empty()) continue;
        auto table = monomial_nf_table(m, D);
        const size_t qd = m.ideal_piece(D).quotient_dim();
        for (const auto& s : syz) {
            QMatrix block(qd, layout.total);
            for (size_t c = 0; c < cols.size(); ++c) {
                if (sgn(s[c]) == 0) continue;
                const size_t j = cols[c].gen;
                const IdealPiece& src = m.ideal_piece(layout.degrees[j]);
                for (size_t k = 0; k < src.standard.size(); ++k) {
                    const Monomial& nu = (*src.basis)[src.standard[k]];
                    const RatVec& nf = table[target->index(monomial_product(cols[c].mult, nu))];
                    const size_t col = layout.offsets[j] + k;
                    for (size_t r = 0; r < qd; ++r) {
                        if (sgn(nf[r]) != 0) block(r, col) += s[c] * nf[r];
                    }
                }
            }
            for (size_t r = 0; r < qd; ++r) rows.append_row(block.row(r));
        }
    }
    return rows;
}

size_t expected_hom_dim(const GraphCurveModel& m) {
    const size_t g = m.nvars();
    return g * g + 3 * g - 4;
}

/// (u : v) pairs for d+1 distinct points on a line spanned by two points.
std::vector<std::pair<Rat, Rat>> line_parameters(int count) {
    std::vector<std::pair<Rat, Rat>> out;
    if (count >= 1) out.emplace_back(1, 0);
    if (count >= 2) out.emplace_back(0, 1);
    for (int k = 1; static_cast<int>(out.size()) < count; ++k) out.emplace_back(1, k);
    return out;
}

}  // namespace

TangentLayout tangent_layout(const GraphCurveModel& m) {
    TangentLayout l;
    for (const auto& f : m.generators) {
        l.degrees.push_back(f.degree());
        l.offsets.push_back(l.total);
        l.total += m.ideal_piece(f.degree()).quotient_dim();
    }
    return l;
}

RatVec tangent_coords(const GraphCurveModel& m, const TangentVector& t) {
    if (t.images.size() != m.generators.size())
        throw MmError(ErrorCode::DimensionMismatch, "tangent vector needs one image per generator");
    RatVec out;
    for (size_t j = 0; j < t.images.size(); ++j) {
        RatVec c = m.nf_coords(t.images[j], m.generators[j].degree());
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

TangentVector tangent_from_coords(const GraphCurveModel& m, const RatVec& c) {
    TangentLayout l = tangent_layout(m);
    if (c.size() != l.total) throw MmError(ErrorCode::DimensionMismatch, "tangent coordinate length");
    TangentVector t;
    for (size_t j = 0; j < l.degrees.size(); ++j) {
        const size_t len = (j + 1 < l.offsets.size() ? l.offsets[j + 1] : l.total) - l.offsets[j];
        RatVec part(c.begin() + static_cast<long>(l.offsets[j]), c.begin() + static_cast<long>(l.offsets[j] + len));
        t.images.push_back(m.from_nf_coords(part, l.degrees[j]));
    }
    return t;
}

TangentVector reduce_tangent(const GraphCurveModel& m, const std::vector<MPoly>& images) {
    if (images.size() != m.generators.size())
        throw MmError(ErrorCode::DimensionMismatch, "tangent vector needs one image per generator");
    TangentVector t;
    for (size_t j = 0; j < images.size(); ++j) {
        const int d = m.generators[j].degree();
        if (!images[j].is_zero() && (!images[j].is_homogeneous() || images[j].degree() != d))
            throw MmError(ErrorCode::DimensionMismatch,
                          "image of generator " + std::to_string(j) + " must be homogeneous of degree " + std::to_string(d));
        t.images.push_back(m.normal_form(images[j], d));
    }
    return t;
}

HomSpace hom_space(const GraphCurveModel& m) {
    TangentLayout layout = tangent_layout(m);
    HomSpace h;
    h.basis = mat_kernel(hom_constraints(m, layout));
    if (h.dim() != expected_hom_dim(m))
        throw MmError(ErrorCode::HomDimensionMismatch, "Hom(I,S/I)_0 has dimension " + std::to_string(h.dim()) +
                                                           ", expected " + std::to_string(expected_hom_dim(m)));
    return h;
}

bool is_homomorphism(const GraphCurveModel& m, const RatVec& coords) {
    return is_zero(hom_constraints(m, tangent_layout(m)).apply(coords));
}

std::vector<TangentVector> pgl_basis(const GraphCurveModel& m) {
    const size_t n = m.nvars();
    std::vector<TangentVector> out;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) continue;
            std::vector<MPoly> images;
            for (const auto& f : m.generators) images.push_back(MPoly::variable(n, i) * f.derivative(j));
            out.push_back(reduce_tangent(m, images));
        }
    }
    return out;
}

TangentVector euler_vector(const GraphCurveModel& m) {
    const size_t n = m.nvars();
    std::vector<MPoly> images;
    for (const auto& f : m.generators) {
        MPoly s(n);
        for (size_t i = 0; i < n; ++i) s += MPoly::variable(n, i) * f.derivative(i);
        images.push_back(s);
    }
    return reduce_tangent(m, images);
}

RatVec node_functional(const GraphCurveModel& m, const EdgeLocalData& d) {
    const size_t n = m.nvars();
    const int D = d.F.degree();
    auto target = MonomialBasis::get(n, D);
    struct Column {
        size_t gen;
        Monomial mult;
    };
    std::vector<Column> cols;
    std::vector<RatVec> vecs;
    for (size_t j = 0; j < m.generators.size(); ++j) {
        const int dj = m.generators[j].degree();
        if (dj > D) continue;
        for (const auto& mu : MonomialBasis::get(n, D - dj)->monomials()) {
            cols.push_back({j, mu});
            vecs.push_back(target->coords(MPoly::term(mu, 1) * m.generators[j]));
        }
    }
    auto sol = mat_solve(QMatrix::from_columns(vecs, target->size()), target->coords(d.F));
    if (!sol) throw MmError(ErrorCode::InternalError, "F_e is not in the ideal");
    // a_j(P_e) for F = sum a_j f_j
    RatVec a(m.generators.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (sgn((*sol)[c]) != 0) a[cols[c].gen] += (*sol)[c] * MPoly::term(cols[c].mult, 1).eval(d.P);
    }
    TangentLayout layout = tangent_layout(m);
    RatVec w(layout.total);
    for (size_t j = 0; j < m.generators.size(); ++j) {
        if (sgn(a[j]) == 0) continue;
        const IdealPiece& piece = m.ideal_piece(layout.degrees[j]);
        for (size_t k = 0; k < piece.standard.size(); ++k)
            w[layout.offsets[j] + k] = a[j] * MPoly::term((*piece.basis)[piece.standard[k]], 1).eval(d.P);
    }
    return w;
}

TangentVector eta_edge(const GraphCurveModel& m, size_t e) {
    const size_t n = m.nvars();
    EdgeLocalData d = edge_local_data(m, e);
    // coordinates (u, v, w) on the plane W_e: u*P + v*P1 + w*P2
    std::vector<MPoly> plane(n, MPoly(3));
    for (size_t i = 0; i < n; ++i) plane[i] = MPoly::linear_form({d.P[i], d.P1[i], d.P2[i]});

    TangentVector t;
    for (const auto& f : m.generators) {
        const int deg = f.degree();
        MPoly fw = f.substitute(plane);
        MPoly b(3);  // fw / (v*w)
        for (const auto& [mono, c] : fw.terms()) {
            if (mono[1] < 1 || mono[2] < 1)
                throw MmError(ErrorCode::InconsistentDeformation, "generator does not vanish on the two lines at a node");
            b.add_term({mono[0], mono[1] - 1, mono[2] - 1}, c);
        }
        auto basis = MonomialBasis::get(n, deg);
        QMatrix a(0, basis->size());
        RatVec rhs;
        for (size_t v = 0; v < m.graph.vertex_count(); ++v) {
            if (v == d.v1 || v == d.v2) continue;
            for (const auto& pt : m.line_points(v, deg + 1)) {
                a.append_row(basis->evaluation_row(pt));
                rhs.push_back(0);
            }
        }
        // on L1 (w = 0) and L2 (v = 0), y must equal b * u * (u + v + w)
        for (int side = 0; side < 2; ++side) {
            const RatVec& Q = side == 0 ? d.P1 : d.P2;
            for (const auto& [s, r] : line_parameters(deg + 1)) {
                a.append_row(basis->evaluation_row(add(scaled(d.P, s), scaled(Q, r))));
                RatVec uvw = side == 0 ? RatVec{s, r, 0} : RatVec{s, 0, r};
                rhs.push_back(b.eval(uvw) * s * (s + r));
            }
        }
        auto y = mat_solve(a, rhs);
        if (!y) throw MmError(ErrorCode::InconsistentDeformation, "no first-order smoothing of edge " + std::to_string(e));
        t.images.push_back(m.normal_form(basis->from_coords(*y), deg));
    }
    return t;
}

TangentVector eta_edge_method2(const GraphCurveModel& m, size_t e, const HomSpace& hom,
                               const std::vector<RatVec>& functionals) {
    const size_t dim = hom.dim();
    QMatrix cond(0, dim);
    for (size_t k = 0; k < functionals.size(); ++k) {
        if (k == e) continue;
        RatVec row(dim);
        for (size_t b = 0; b < dim; ++b) row[b] = dot(functionals[k], hom.basis[b]);
        cond.append_row(row);
    }
    auto ker = mat_kernel(cond);
    const TangentLayout layout = tangent_layout(m);
    SpanBuilder pgl(layout.total);
    for (const auto& p : pgl_basis(m)) pgl.add(tangent_coords(m, p));
    if (ker.size() != pgl.rank() + 1)
        throw MmError(ErrorCode::InconsistentDeformation, "node conditions do not cut out a single direction");
    for (const auto& k : ker) {
        RatVec v(layout.total);
        for (size_t b = 0; b < dim; ++b) {
            if (sgn(k[b]) != 0) v = add(v, scaled(hom.basis[b], k[b]));
        }
        if (!pgl.contains(v)) return tangent_from_coords(m, v);
    }
    throw MmError(ErrorCode::InconsistentDeformation, "node conditions only leave the PGL directions");
}

SignData sign_data(const EdgeLocalData& d) {
    SignData s;
    UniPoly r1 = d.f.restrict_to_line(d.P, add(d.P1, d.P2));
    UniPoly r2 = d.f.restrict_to_line(d.P, add(d.P1p, d.P2p));
    s.t0 = isolate_min_positive_root(r1 * r2);
    if (s.t0) {
        s.t_star = s.t0->lo / 2;
        s.attained_on_ray1 = r1.degree() >= 1 && count_roots(r1, s.t0->lo, s.t0->hi) > 0;
    } else {
        s.t_star = 1;
    }
    s.s = sign(d.F.eval(add(d.P, scaled(add(d.P1, d.P2), s.t_star))));
    if (s.s == 0) throw MmError(ErrorCode::InternalError, "F vanishes inside the segment");
    return s;
}

TangentVector normalize_eta(const GraphCurveModel& m, const TangentVector& eta, const RatVec& functional, int s) {
    RatVec c = tangent_coords(m, eta);
    Rat val = dot(functional, c);
    if (sgn(val) == 0) throw MmError(ErrorCode::ZeroPairing, "eta(F)(P) vanishes");
    return tangent_from_coords(m, scaled(c, Rat(-s) / val));
}

Rat AdaptedBasis::edge_coordinate(const GraphCurveModel& m, size_t e, const TangentVector& t) const {
    return dot(functionals[e], tangent_coords(m, t)) / dot(functionals[e], tangent_coords(m, eta[e]));
}

AdaptedBasis adapted_basis(const GraphCurveModel& m) {
    AdaptedBasis b;
    b.layout = tangent_layout(m);
    HomSpace hom = hom_space(m);
    b.hom_dim = hom.dim();
    b.pgl = pgl_basis(m);
    const size_t E = m.graph.edge_count();
    for (size_t e = 0; e < E; ++e) {
        b.local.push_back(edge_local_data(m, e));
        b.functionals.push_back(node_functional(m, b.local.back()));
        b.signs.push_back(sign_data(b.local.back()));
    }
    QMatrix constraints = hom_constraints(m, b.layout);
    for (size_t e = 0; e < E; ++e) {
        TangentVector eta = normalize_eta(m, eta_edge(m, e), b.functionals[e], b.signs[e].s);
        if (!is_zero(constraints.apply(tangent_coords(m, eta))))
            throw MmError(ErrorCode::InconsistentDeformation, "smoothing direction is not a homomorphism");
        b.eta.push_back(std::move(eta));
    }
    SpanBuilder span(b.layout.total);
    for (const auto& p : b.pgl) {
        RatVec c = tangent_coords(m, p);
        for (size_t e = 0; e < E; ++e) {
            if (sgn(dot(b.functionals[e], c)) != 0)
                throw MmError(ErrorCode::InternalError, "PGL direction leaves a node hyperplane");
        }
        span.add(c);
    }
    for (size_t e = 0; e < E; ++e) {
        RatVec c = tangent_coords(m, b.eta[e]);
        for (size_t k = 0; k < E; ++k) {
            if (k != e && sgn(dot(b.functionals[k], c)) != 0)
                throw MmError(ErrorCode::InternalError, "smoothing direction leaves another node hyperplane");
        }
        span.add(c);
    }
    if (span.rank() != b.hom_dim)
        throw MmError(ErrorCode::HomDimensionMismatch, "adapted basis has rank " + std::to_string(span.rank()));
    return b;
}

Decomposition decompose(const GraphCurveModel& m, const AdaptedBasis& b, const TangentVector& t) {
    std::vector<RatVec> cols;
    for (const auto& p : b.pgl) cols.push_back(tangent_coords(m, p));
    for (const auto& e : b.eta) cols.push_back(tangent_coords(m, e));
    auto sol = mat_solve(QMatrix::from_columns(cols, b.layout.total), tangent_coords(m, t));
    if (!sol) throw MmError(ErrorCode::NotInSpan, "vector is outside the tangent space");
    Decomposition d;
    d.pgl.assign(sol->begin(), sol->begin() + static_cast<long>(b.pgl.size()));
    d.lambda.assign(sol->begin() + static_cast<long>(b.pgl.size()), sol->end());
    for (size_t e = 0; e < d.lambda.size(); ++e) {
        if (d.lambda[e] != b.edge_coordinate(m, e, t))
            throw MmError(ErrorCode::InternalError, "edge coefficient disagrees with its node functional");
    }
    return d;
}

ReferenceMatch adopt_reference_edges(const GraphCurveModel& m, AdaptedBasis& b,
                                     const std::vector<std::optional<TangentVector>>& refs) {
    ReferenceMatch out;
    out.ratio.resize(b.eta.size());
    bool all_positive = true;
    for (size_t e = 0; e < b.eta.size() && e < refs.size(); ++e) {
        if (!refs[e]) continue;
        Decomposition d = decompose(m, b, *refs[e]);
        bool only_e = true;
        for (size_t k = 0; k < d.lambda.size(); ++k) {
            if (k != e && sgn(d.lambda[k]) != 0) only_e = false;
        }
        if (only_e && sgn(d.lambda[e]) != 0) out.ratio[e] = d.lambda[e];
        if (!out.ratio[e] || sgn(*out.ratio[e]) <= 0) all_positive = false;
    }
    if (all_positive) {
        for (size_t e = 0; e < b.eta.size() && e < refs.size(); ++e) {
            if (refs[e]) b.eta[e] = *refs[e];
        }
    }
    return out;
}

EpsPoly split_eps(const MPoly& p, size_t nvars) {
    if (p.nvars() < nvars + 1) throw MmError(ErrorCode::DimensionMismatch, "family polynomial lacks an eps variable");
    const size_t eps = p.nvars() - 1;
    EpsPoly out;
    for (const auto& [mono, c] : p.terms()) {
        for (size_t i = nvars; i < eps; ++i) {
            if (mono[i] != 0) throw MmError(ErrorCode::InvalidArgument, "family polynomial still has parameters");
        }
        const size_t k = static_cast<size_t>(mono[eps]);
        if (out.coeffs.size() <= k) out.coeffs.resize(k + 1, MPoly(nvars));
        out.coeffs[k].add_term(Monomial(mono.begin(), mono.begin() + static_cast<long>(nvars)), c);
    }
    return out;
}

TangentVector family_tangent(const GraphCurveModel& m, const std::vector<EpsPoly>& family, int max_shift) {
    const size_t n = m.nvars();
    struct Member {
        const EpsPoly* poly;
        int degree;
    };
    std::vector<Member> members;
    for (const auto& p : family) {
        int deg = -1;
        for (const auto& c : p.coeffs) {
            if (c.is_zero()) continue;
            if (c.nvars() != n) throw MmError(ErrorCode::DimensionMismatch, "family polynomial has the wrong ring");
            if (!c.is_homogeneous() || (deg >= 0 && c.degree() != deg))
                throw MmError(ErrorCode::InvalidArgument, "family polynomials must be homogeneous in the variables");
            deg = c.degree();
        }
        if (deg >= 0) members.push_back({&p, deg});
    }

    TangentVector t;
    for (size_t j = 0; j < m.generators.size(); ++j) {
        const MPoly& f = m.generators[j];
        const int d = f.degree();
        auto basis = MonomialBasis::get(n, d);
        const size_t rows_per = basis->size();
        std::optional<MPoly> image;
        for (int k = 0; k <= max_shift && !image; ++k) {
            const size_t K = static_cast<size_t>(k);
            struct Column {
                size_t member;
                size_t shift;
                Monomial mult;
            };
            std::vector<Column> cols;
            std::vector<RatVec> vecs;
            for (size_t i = 0; i < members.size(); ++i) {
                if (members[i].degree > d) continue;
                const auto& coeffs = members[i].poly->coeffs;
                for (size_t sh = 0; sh <= K; ++sh) {
                    for (const auto& mu : MonomialBasis::get(n, d - members[i].degree)->monomials()) {
                        RatVec v((K + 1) * rows_per);
                        MPoly mono = MPoly::term(mu, 1);
                        for (size_t s = 0; s < coeffs.size() && sh + s <= K; ++s) {
                            if (coeffs[s].is_zero()) continue;
                            RatVec c = basis->coords(mono * coeffs[s]);
                            std::copy(c.begin(), c.end(), v.begin() + static_cast<long>((sh + s) * rows_per));
                        }
                        cols.push_back({i, sh, mu});
                        vecs.push_back(std::move(v));
                    }
                }
            }
            RatVec rhs((K + 1) * rows_per);
            RatVec fc = basis->coords(f);
            std::copy(fc.begin(), fc.end(), rhs.begin() + static_cast<long>(K * rows_per));
            if (vecs.empty()) continue;
            auto sol = mat_solve(QMatrix::from_columns(vecs, rhs.size()), rhs);
            if (!sol) continue;
            MPoly y(n);
            for (size_t c = 0; c < cols.size(); ++c) {
                if (sgn((*sol)[c]) == 0) continue;
                const auto& coeffs = members[cols[c].member].poly->coeffs;
                const size_t s = K + 1 - cols[c].shift;
                if (s < coeffs.size() && !coeffs[s].is_zero()) y += (*sol)[c] * (MPoly::term(cols[c].mult, 1) * coeffs[s]);
            }
            image = m.normal_form(y, d);
        }
        if (!image)
            throw MmError(ErrorCode::NoFirstOrderLift,
                          "generator " + std::to_string(j) + " has no first-order lift within eps^" + std::to_string(max_shift));
        t.images.push_back(*image);
    }
    return t;
}

std::vector<EpsPoly> specialize_family(const ParamFamily& fam, const RatVec& theta) {
    if (theta.size() != fam.nparams) throw MmError(ErrorCode::DimensionMismatch, "parameter count");
    const size_t ring = fam.nvars + 1;
    std::vector<MPoly> images;
    for (size_t i = 0; i < fam.nvars; ++i) images.push_back(MPoly::variable(ring, i));
    for (size_t p = 0; p < fam.nparams; ++p) images.push_back(MPoly::constant(ring, theta[p]));
    images.push_back(MPoly::variable(ring, fam.nvars));
    std::vector<EpsPoly> out;
    for (const auto& p : fam.polys) {
        if (p.nvars() != fam.nvars + fam.nparams + 1)
            throw MmError(ErrorCode::DimensionMismatch, "family polynomial has the wrong ring");
        out.push_back(split_eps(p.substitute(images), fam.nvars));
    }
    return out;
}

std::vector<RatVec> hyperplanes_on_family(const GraphCurveModel& m, const AdaptedBasis& b, const ParamFamily& fam) {
    const size_t E = b.eta.size();
    auto coords_at = [&](const RatVec& theta) {
        TangentVector t = family_tangent(m, specialize_family(fam, theta));
        RatVec c(E);
        for (size_t e = 0; e < E; ++e) c[e] = b.edge_coordinate(m, e, t);
        return c;
    };
    std::vector<RatVec> forms(E, RatVec(fam.nparams + 1));
    RatVec base = coords_at(RatVec(fam.nparams));
    for (size_t e = 0; e < E; ++e) forms[e][0] = base[e];
    for (size_t p = 0; p < fam.nparams; ++p) {
        RatVec theta(fam.nparams);
        theta[p] = 1;
        RatVec c = coords_at(theta);
        for (size_t e = 0; e < E; ++e) forms[e][p + 1] = c[e] - base[e];
    }
    // one more point to confirm the dependence is affine
    RatVec probe(fam.nparams);
    for (size_t p = 0; p < fam.nparams; ++p) {
        probe[p] = Rat(static_cast<long>(p % 3) - 1, static_cast<long>(p % 4) + 1);
        probe[p].canonicalize();
    }
    RatVec c = coords_at(probe);
    for (size_t e = 0; e < E; ++e) {
        Rat v = forms[e][0];
        for (size_t p = 0; p < fam.nparams; ++p) v += forms[e][p + 1] * probe[p];
        if (v != c[e]) throw MmError(ErrorCode::InvalidArgument, "family tangent is not affine in the parameters");
    }
    return forms;
}

}  // namespace mmc
