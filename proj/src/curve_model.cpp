#include "mmc/curve_model.hpp"

#include "mmc/error.hpp"

#include <algorithm>
#include <set>

namespace mmc {

namespace {

RatVec monomial_values(const MonomialBasis& basis, const RatVec& point) {
    const size_t n = basis.nvars();
    const int d = basis.degree();
    std::vector<RatVec> pw(n, RatVec(static_cast<size_t>(d) + 1));
    for (size_t i = 0; i < n; ++i) {
        pw[i][0] = 1;
        for (int k = 1; k <= d; ++k) pw[i][static_cast<size_t>(k)] = pw[i][static_cast<size_t>(k) - 1] * point[i];
    }
    RatVec row(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        Rat v = 1;
        const Monomial& m = basis[k];
        for (size_t i = 0; i < n && sgn(v) != 0; ++i) {
            if (m[i] != 0) v *= pw[i][static_cast<size_t>(m[i])];
        }
        row[k] = v;
    }
    return row;
}

/// Coordinates of x_var * p where p has coordinates `row` in `from`.
RatVec times_variable(const MonomialBasis& from, const MonomialBasis& to, const RatVec& row, size_t var) {
    RatVec out(to.size());
    Monomial m;
    for (size_t k = 0; k < row.size(); ++k) {
        if (sgn(row[k]) == 0) continue;
        m = from[k];
        m[var] += 1;
        out[to.index(m)] = row[k];
    }
    return out;
}

/// Span of S_1 * I_{d-1} inside degree d coordinates.
SpanBuilder shifted_span(const GraphCurveModel& m, int d) {
    auto to = MonomialBasis::get(m.nvars(), d);
    SpanBuilder sb(to->size());
    if (d - 1 < 1) return sb;
    const IdealPiece& lower = m.ideal_piece(d - 1);
    for (size_t r = 0; r < lower.rref.rows(); ++r) {
        RatVec row = lower.rref.row(r);
        for (size_t i = 0; i < m.nvars(); ++i) sb.add(times_variable(*lower.basis, *to, row, i));
    }
    return sb;
}

LineSpan span_of_prime(const std::vector<RatVec>& prime, size_t nvars) {
    QMatrix a = QMatrix::from_rows(prime, nvars);
    auto k = mat_kernel(a);
    if (k.size() != 2)
        throw MmError(ErrorCode::NotAGraphCurve, "a line prime must cut out a line (kernel of dimension 2)");
    return {k[0], k[1]};
}

}  // namespace

bool projectively_equal(const RatVec& u, const RatVec& v) {
    if (u.size() != v.size()) return false;
    if (is_zero(u) || is_zero(v)) return false;
    size_t k = 0;
    while (sgn(u[k]) == 0) ++k;
    if (sgn(v[k]) == 0) return false;
    Rat s = v[k] / u[k];
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] * s != v[i]) return false;
    }
    return true;
}

RatVec primitive_representative(const RatVec& v) {
    if (is_zero(v)) return v;
    Int l = denominator_lcm(v);
    std::vector<Int> num;
    Int g = 0;
    for (const auto& x : v) {
        Int n = Int(x.get_num() * (l / x.get_den()));
        num.push_back(n);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    size_t k = 0;
    while (num[k] == 0) ++k;
    if (num[k] < 0) g = -g;
    RatVec out;
    for (const auto& n : num) out.push_back(Rat(n / g));
    return out;
}

std::optional<RatVec> linear_form_through(const std::vector<RatVec>& zeros, const RatVec& one) {
    std::vector<RatVec> rows = zeros;
    rows.push_back(one);
    RatVec rhs(rows.size(), 0);
    rhs.back() = 1;
    return mat_solve(QMatrix::from_rows(rows, one.size()), rhs);
}

std::vector<RatVec> GraphCurveModel::line_points(size_t v, int count) const {
    const LineSpan& l = lines.at(v);
    std::vector<RatVec> pts;
    for (int k = 0; k < count; ++k) {
        if (k == 0) {
            pts.push_back(l.p);
        } else if (k == 1) {
            pts.push_back(l.q);
        } else {
            pts.push_back(add(l.p, scaled(l.q, Rat(k - 1))));
        }
    }
    return pts;
}

const IdealPiece& GraphCurveModel::ideal_piece(int d) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->pieces.find(d);
    if (it != cache_->pieces.end()) return *it->second;
    auto piece = std::make_shared<IdealPiece>();
    piece->degree = d;
    piece->basis = MonomialBasis::get(nvars(), d);
    const size_t cols = piece->basis->size();
    QMatrix eval(0, cols);
    for (size_t v = 0; v < lines.size(); ++v) {
        for (const auto& pt : line_points(v, d + 1)) eval.append_row(monomial_values(*piece->basis, pt));
    }
    auto kernel = mat_kernel(eval);
    if (kernel.empty()) {
        piece->rref = QMatrix(0, cols);
    } else {
        RowEchelon re = row_reduce(QMatrix::from_rows(kernel, cols));
        piece->rref = re.rref;
        piece->pivots = re.pivot_cols;
    }
    std::vector<char> is_pivot(cols, 0);
    for (size_t p : piece->pivots) is_pivot[p] = 1;
    for (size_t c = 0; c < cols; ++c) {
        if (!is_pivot[c]) piece->standard.push_back(c);
    }
    cache_->pieces.emplace(d, piece);
    return *piece;
}

RatVec GraphCurveModel::nf_coords(const MPoly& p, int d) const {
    if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != d))
        throw MmError(ErrorCode::DimensionMismatch, "normal form expects a homogeneous polynomial of degree " +
                                                        std::to_string(d));
    const IdealPiece& piece = ideal_piece(d);
    RatVec v = piece.basis->coords(p);
    for (size_t r = 0; r < piece.pivots.size(); ++r) {
        const size_t c = piece.pivots[r];
        if (sgn(v[c]) == 0) continue;
        const Rat s = v[c];
        for (size_t j = c; j < v.size(); ++j) {
            const Rat& a = piece.rref(r, j);
            if (sgn(a) != 0) v[j] -= s * a;
        }
    }
    RatVec out;
    out.reserve(piece.standard.size());
    for (size_t c : piece.standard) out.push_back(v[c]);
    return out;
}

MPoly GraphCurveModel::from_nf_coords(const RatVec& c, int d) const {
    const IdealPiece& piece = ideal_piece(d);
    if (c.size() != piece.standard.size()) throw MmError(ErrorCode::DimensionMismatch, "normal form length");
    MPoly p(nvars());
    for (size_t k = 0; k < c.size(); ++k) p.add_term((*piece.basis)[piece.standard[k]], c[k]);
    return p;
}

MPoly GraphCurveModel::normal_form(const MPoly& p, int d) const { return from_nf_coords(nf_coords(p, d), d); }

bool GraphCurveModel::in_ideal(const MPoly& p) const {
    if (p.is_zero()) return true;
    if (!p.is_homogeneous()) {
        for (int d = 0; d <= p.degree(); ++d) {
            MPoly h = p.homogeneous_part(d);
            if (!h.is_zero() && !in_ideal(h)) return false;
        }
        return true;
    }
    if (p.degree() == 0) return false;
    return is_zero(nf_coords(p, p.degree()));
}

int GraphCurveModel::max_generator_degree() const {
    int d = 0;
    for (const auto& f : generators) d = std::max(d, f.degree());
    return d;
}

int GraphCurveModel::min_generator_degree() const {
    int d = INT_MAX;
    for (const auto& f : generators) d = std::min(d, f.degree());
    return d;
}

void check_model(const GraphCurveModel& m) {
    auto fail = [](const std::string& what) { throw MmError(ErrorCode::DegenerateConfiguration, what); };
    const auto& g = m.graph;
    const size_t n = m.nvars();
    if (m.nodes.size() != g.edge_count()) fail("one node per edge expected");
    for (size_t e = 0; e < m.nodes.size(); ++e) {
        if (m.nodes[e].size() != n || is_zero(m.nodes[e])) fail("node " + std::to_string(e) + " is zero");
        for (size_t f = 0; f < e; ++f) {
            if (projectively_equal(m.nodes[e], m.nodes[f]))
                fail("nodes " + std::to_string(f) + " and " + std::to_string(e) + " coincide");
        }
    }
    if (vectors_rank(m.nodes, n) != n) fail("nodes do not span the ambient space");
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        std::vector<RatVec> cols{m.nodes[inc[0]], m.nodes[inc[1]], m.nodes[inc[2]]};
        QMatrix a = QMatrix::from_columns(cols, n);
        auto rel = mat_kernel(a);
        if (rel.size() != 1) fail("nodes at vertex " + std::to_string(v) + " are not collinear");
        for (const auto& x : rel[0]) {
            if (sgn(x) == 0) fail("nodes at vertex " + std::to_string(v) + " are degenerate");
        }
    }
    for (size_t u = 0; u < g.vertex_count(); ++u) {
        for (size_t v = u + 1; v < g.vertex_count(); ++v) {
            size_t r = vectors_rank({m.lines[u].p, m.lines[u].q, m.lines[v].p, m.lines[v].q}, n);
            bool adjacent = g.edge_between(u, v).has_value();
            if (adjacent && r != 3) fail("adjacent lines " + std::to_string(u) + "," + std::to_string(v) + " do not meet in a point");
            if (!adjacent && r != 4) fail("lines " + std::to_string(u) + "," + std::to_string(v) + " meet but are not adjacent");
        }
    }
}

namespace {

void assign_pairing(GraphCurveModel& m, const std::optional<std::vector<std::vector<size_t>>>& faces) {
    if (faces) {
        m.pairing = face_cover_from_faces(m.graph, *faces);
        m.pairing_is_planar = true;
        return;
    }
    try {
        m.pairing = face_double_cover(m.graph).pairing;
        m.pairing_is_planar = true;
    } catch (const MmError& e) {
        if (e.code() != ErrorCode::NotPlanar) throw;
        m.pairing.bits.assign(m.graph.edge_count(), 0);
        m.pairing_is_planar = false;
    }
}

void default_names(GraphCurveModel& m) {
    m.var_names.clear();
    for (size_t i = 0; i < m.nvars(); ++i) m.var_names.push_back("x" + std::to_string(i));
}

void lines_from_nodes(GraphCurveModel& m) {
    m.lines.clear();
    for (size_t v = 0; v < m.graph.vertex_count(); ++v) {
        const auto& inc = m.graph.incident(v);
        m.lines.push_back({m.nodes[inc[0]], m.nodes[inc[1]]});
    }
}

}  // namespace

GraphCurveModel build_model(const TrivalentGraph& g, const std::optional<std::vector<std::vector<size_t>>>& faces) {
    GraphCurveModel m;
    m.genus = validate(g);
    m.graph = g;
    auto basis = cycle_basis(g);
    m.nodes.assign(g.edge_count(), RatVec(m.nvars()));
    for (size_t i = 0; i < basis.incidence.size(); ++i) {
        for (size_t e = 0; e < g.edge_count(); ++e) m.nodes[e][i] = basis.incidence[i][e];
    }
    lines_from_nodes(m);
    default_names(m);
    check_model(m);
    assign_pairing(m, faces);
    interpolate_ideal(m);
    return m;
}

GraphCurveModel restore_model(const TrivalentGraph& g, const std::vector<RatVec>& nodes, const std::vector<MPoly>& generators,
                              const std::vector<std::string>& var_names, const EdgePairing& pairing, bool planar) {
    GraphCurveModel m;
    m.genus = validate(g);
    m.graph = g;
    if (nodes.size() != g.edge_count()) throw MmError(ErrorCode::DimensionMismatch, "need one node per edge");
    for (const auto& p : nodes) {
        if (p.size() != m.nvars()) throw MmError(ErrorCode::DimensionMismatch, "node has the wrong length");
    }
    if (pairing.bits.size() != g.edge_count()) throw MmError(ErrorCode::InvalidPairing, "need one pairing bit per edge");
    m.nodes = nodes;
    lines_from_nodes(m);
    if (var_names.size() == m.nvars())
        m.var_names = var_names;
    else
        default_names(m);
    check_model(m);
    m.pairing = pairing;
    m.pairing_is_planar = planar;
    m.interpolation_degree = m.genus == 3 ? 4 : 3;
    set_generators(m, generators);
    return m;
}

GraphCurveModel ingest_model(const std::vector<LineInput>& lines, size_t nvars,
                             const std::optional<TrivalentGraph>& expected,
                             const std::optional<std::vector<std::vector<size_t>>>& faces) {
    std::vector<LineSpan> spans;
    for (size_t i = 0; i < lines.size(); ++i) {
        const LineInput& li = lines[i];
        if (!li.prime.empty()) {
            for (const auto& r : li.prime) {
                if (r.size() != nvars) throw MmError(ErrorCode::DimensionMismatch, "line form has wrong length");
            }
            spans.push_back(span_of_prime(li.prime, nvars));
        } else {
            if (li.points.size() != 2 || vectors_rank(li.points, nvars) != 2)
                throw MmError(ErrorCode::NotAGraphCurve, "line " + std::to_string(i) + " needs two independent points");
            spans.push_back({li.points[0], li.points[1]});
        }
    }
    std::vector<Edge> edges;
    std::map<std::pair<size_t, size_t>, RatVec> meet;
    for (size_t u = 0; u < spans.size(); ++u) {
        for (size_t v = u + 1; v < spans.size(); ++v) {
            QMatrix a = QMatrix::from_columns(
                {spans[u].p, spans[u].q, scaled(spans[v].p, -1), scaled(spans[v].q, -1)}, nvars);
            auto k = mat_kernel(a);
            if (k.size() > 1) throw MmError(ErrorCode::NotAGraphCurve, "lines " + std::to_string(u) + " and " +
                                                                           std::to_string(v) + " coincide");
            if (k.size() == 1) {
                RatVec pt = add(scaled(spans[u].p, k[0][0]), scaled(spans[u].q, k[0][1]));
                meet[{u, v}] = primitive_representative(pt);
                edges.push_back({u, v});
            }
        }
    }
    if (expected) {
        std::set<std::pair<size_t, size_t>> want, got;
        for (const auto& e : expected->edges()) want.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
        for (const auto& e : edges) got.insert({e.a, e.b});
        if (want != got || expected->vertex_count() != spans.size())
            throw MmError(ErrorCode::NotAGraphCurve, "intersection pattern differs from the expected graph");
        edges = expected->edges();
    }
    GraphCurveModel m;
    m.graph = TrivalentGraph(spans.size(), edges);
    try {
        m.genus = validate(m.graph);
    } catch (const MmError& e) {
        throw MmError(ErrorCode::NotAGraphCurve, "intersection graph is invalid: " + e.detail());
    }
    if (static_cast<size_t>(m.genus) != nvars)
        throw MmError(ErrorCode::NotAGraphCurve, "graph genus does not match the number of variables");
    for (const auto& e : m.graph.edges()) m.nodes.push_back(meet.at({std::min(e.a, e.b), std::max(e.a, e.b)}));
    lines_from_nodes(m);
    default_names(m);
    check_model(m);
    assign_pairing(m, faces);
    interpolate_ideal(m);
    return m;
}

std::vector<MPoly> interpolate_ideal(GraphCurveModel& m) {
    const int top = m.genus == 3 ? 4 : 3;
    std::vector<MPoly> gens;
    for (int d = 2; d <= top; ++d) {
        const IdealPiece& piece = m.ideal_piece(d);
        SpanBuilder sb = shifted_span(m, d);
        for (size_t r = 0; r < piece.rref.rows(); ++r) {
            RatVec row = piece.rref.row(r);
            if (sb.add(row)) gens.push_back(piece.basis->from_coords(row));
        }
    }
    SpanBuilder next = shifted_span(m, top + 1);
    if (next.rank() != m.ideal_piece(top + 1).dim())
        throw MmError(ErrorCode::GenerationCheckFailed,
                      "generators up to degree " + std::to_string(top) + " do not generate degree " +
                          std::to_string(top + 1));
    m.generators = gens;
    m.interpolation_degree = top;
    return gens;
}

void set_generators(GraphCurveModel& m, const std::vector<MPoly>& gens) {
    int top = m.interpolation_degree;
    for (size_t i = 0; i < gens.size(); ++i) {
        const MPoly& f = gens[i];
        if (f.nvars() != m.nvars()) throw MmError(ErrorCode::DimensionMismatch, "generator has wrong variable count");
        if (f.is_zero() || !f.is_homogeneous() || f.degree() < 2)
            throw MmError(ErrorCode::InvalidArgument, "generator " + std::to_string(i + 1) + " is not a homogeneous form of degree >= 2");
        if (!m.in_ideal(f))
            throw MmError(ErrorCode::InvalidArgument, "generator " + std::to_string(i + 1) + " does not vanish on the curve");
        top = std::max(top, f.degree());
    }
    for (int d = 2; d <= top; ++d) {
        const IdealPiece& piece = m.ideal_piece(d);
        SpanBuilder sb = shifted_span(m, d);
        for (size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].degree() != d) continue;
            if (!sb.add(piece.basis->coords(gens[i])))
                throw MmError(ErrorCode::InvalidArgument, "generator " + std::to_string(i + 1) + " is redundant");
        }
        if (sb.rank() != piece.dim())
            throw MmError(ErrorCode::InvalidArgument, "generators do not span the ideal in degree " + std::to_string(d));
    }
    m.generators = gens;
}

EdgeLocalData edge_local_data(const GraphCurveModel& m, size_t e, bool negate) {
    const auto& g = m.graph;
    const size_t n = m.nvars();
    EdgeLocalData d;
    d.edge = e;
    d.v1 = g.edge(e).a;
    d.v2 = g.edge(e).b;
    auto parts = pairing_partition(g, m.pairing, e);
    d.e1 = parts[0][0];
    d.e2 = parts[0][1];
    d.e1p = parts[1][0];
    d.e2p = parts[1][1];
    d.P = negate ? scaled(m.nodes[e], -1) : m.nodes[e];

    auto split = [&](size_t a, size_t b, RatVec& pa, RatVec& pb) {
        auto coef = mat_solve(QMatrix::from_columns({m.nodes[a], m.nodes[b]}, n), d.P);
        if (!coef || sgn((*coef)[0]) == 0 || sgn((*coef)[1]) == 0)
            throw MmError(ErrorCode::DegenerateConfiguration, "node is not a combination of its companions");
        pa = scaled(m.nodes[a], (*coef)[0]);
        pb = scaled(m.nodes[b], (*coef)[1]);
    };
    split(d.e1, d.e1p, d.P1, d.P1p);
    split(d.e2, d.e2p, d.P2, d.P2p);

    auto l1 = linear_form_through({d.P, d.P1}, d.P2);
    auto l2 = linear_form_through({d.P, d.P2}, d.P1);
    if (!l1 || !l2) throw MmError(ErrorCode::DegenerateConfiguration, "cannot separate the two lines at a node");
    d.l1 = MPoly::linear_form(*l1);
    d.l2 = MPoly::linear_form(*l2);
    for (const auto& c : mat_kernel(QMatrix::from_rows({d.P, d.P1, d.P2}, n))) d.q.push_back(MPoly::linear_form(c));

    std::vector<size_t> uncovered;
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        if (v != d.v1 && v != d.v2) uncovered.push_back(v);
    }
    d.f = MPoly::constant(n, 1);
    while (!uncovered.empty()) {
        std::vector<RatVec> span{m.lines[uncovered[0]].p, m.lines[uncovered[0]].q};
        std::vector<size_t> rest;
        for (size_t k = 1; k < uncovered.size(); ++k) {
            std::vector<RatVec> trial = span;
            trial.push_back(m.lines[uncovered[k]].p);
            trial.push_back(m.lines[uncovered[k]].q);
            std::vector<RatVec> with_p = trial;
            with_p.push_back(d.P);
            if (vectors_rank(with_p, n) > vectors_rank(trial, n)) {
                span = std::move(trial);
            } else {
                rest.push_back(uncovered[k]);
            }
        }
        auto form = linear_form_through(span, d.P);
        if (!form) throw MmError(ErrorCode::DegenerateConfiguration, "a line passes through the node");
        MPoly lf = MPoly::linear_form(*form);
        d.f_factors.push_back(lf);
        d.f = d.f * lf;
        uncovered = std::move(rest);
    }
    d.F = d.f * d.l1 * d.l2;
    const int deg = d.F.degree();
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        for (const auto& pt : m.line_points(v, deg + 1)) {
            if (sgn(d.F.eval(pt)) != 0) throw MmError(ErrorCode::InternalError, "f*l1*l2 does not vanish on the curve");
        }
    }
    return d;
}

}  // namespace mmc
