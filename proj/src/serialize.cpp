#include "mmc/serialize.hpp"

#include "mmc/error.hpp"
#include "mmc/poly_io.hpp"

#include "json.hpp"

namespace mmc {

using nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::exception& e) {
        throw MmError(ErrorCode::ParseError, e.what());
    }
}

template <class F>
auto field(const ordered_json& j, const char* key, F&& get) {
    if (!j.contains(key)) throw MmError(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
    try {
        return get(j.at(key));
    } catch (const ordered_json::exception& e) {
        throw MmError(ErrorCode::ParseError, std::string("field \"") + key + "\": " + e.what());
    }
}

RatVec rats_from(const ordered_json& j) {
    RatVec v;
    for (const auto& x : j) v.push_back(parse_rat(x.get<std::string>()));
    return v;
}

ordered_json images_json(const TangentVector& t, const std::vector<std::string>& names) {
    ordered_json a = ordered_json::array();
    for (const auto& p : t.images) a.push_back(render_poly(p, names));
    return a;
}

TangentVector images_from(const GraphCurveModel& m, const ordered_json& j) {
    std::vector<MPoly> images;
    for (const auto& s : j) images.push_back(parse_poly(s.get<std::string>(), m.var_names));
    return reduce_tangent(m, images);
}

GraphFile graph_view(const GraphCurveModel& m, const std::vector<std::string>& labels) {
    GraphFile f{m.graph, std::nullopt, labels};
    if (f.labels.size() != m.graph.vertex_count()) {
        f.labels.clear();
        for (size_t v = 0; v < m.graph.vertex_count(); ++v) f.labels.push_back(std::to_string(v));
    }
    return f;
}

}  // namespace

std::vector<std::string> rat_strings(const RatVec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

std::string model_to_json(const GraphCurveModel& m, const std::vector<std::string>& labels) {
    GraphFile gf = graph_view(m, labels);
    ordered_json j;
    j["genus"] = m.genus;
    j["vars"] = m.var_names;
    ordered_json g;
    g["vertices"] = m.graph.vertex_count();
    ordered_json edges = ordered_json::array();
    for (size_t e = 0; e < m.graph.edge_count(); ++e) edges.push_back({m.graph.edge(e).a, m.graph.edge(e).b});
    g["edges"] = edges;
    g["labels"] = gf.labels;
    j["graph"] = g;
    j["pairing"] = m.pairing.bits;
    j["planar"] = m.pairing_is_planar;
    ordered_json nodes = ordered_json::array();
    for (const auto& p : m.nodes) nodes.push_back(rat_strings(p));
    j["nodes"] = nodes;
    ordered_json gens = ordered_json::array();
    for (const auto& f : m.generators) gens.push_back(render_poly(f, m.var_names));
    j["generators"] = gens;
    return j.dump(1) + "\n";
}

ModelFile model_from_json(const std::string& text) {
    ordered_json j = parse(text);
    auto vars = field(j, "vars", [](const ordered_json& x) { return x.get<std::vector<std::string>>(); });
    const ordered_json& g = field(j, "graph", [](const ordered_json& x) -> const ordered_json& { return x; });
    const size_t n = field(g, "vertices", [](const ordered_json& x) { return x.get<size_t>(); });
    std::vector<Edge> edges;
    for (const auto& e : field(g, "edges", [](const ordered_json& x) { return x; }))
        edges.push_back({e.at(0).get<size_t>(), e.at(1).get<size_t>()});
    TrivalentGraph graph(n, edges);
    ModelFile out;
    if (g.contains("labels")) out.labels = g["labels"].get<std::vector<std::string>>();
    EdgePairing rho{field(j, "pairing", [](const ordered_json& x) { return x.get<std::vector<uint8_t>>(); })};
    const bool planar = field(j, "planar", [](const ordered_json& x) { return x.get<bool>(); });
    std::vector<RatVec> nodes;
    for (const auto& p : field(j, "nodes", [](const ordered_json& x) { return x; })) nodes.push_back(rats_from(p));
    std::vector<MPoly> gens;
    for (const auto& s : field(j, "generators", [](const ordered_json& x) { return x; }))
        gens.push_back(parse_poly(s.get<std::string>(), vars));
    out.model = restore_model(graph, nodes, gens, vars, rho, planar);
    return out;
}

std::string basis_to_json(const GraphCurveModel& m, const AdaptedBasis& b, const std::vector<std::string>& labels) {
    GraphFile gf = graph_view(m, labels);
    ordered_json j;
    j["vars"] = m.var_names;
    j["hom_dim"] = b.hom_dim;
    ordered_json pgl = ordered_json::array();
    for (const auto& p : b.pgl) pgl.push_back(images_json(p, m.var_names));
    j["pgl"] = pgl;
    ordered_json edges = ordered_json::array();
    for (size_t e = 0; e < b.eta.size(); ++e) {
        ordered_json x;
        x["edge"] = e;
        x["label"] = edge_label(gf, e);
        x["eta"] = images_json(b.eta[e], m.var_names);
        const SignData& s = b.signs[e];
        ordered_json sj;
        sj["s"] = s.s;
        if (s.t0)
            sj["t0"] = {to_string(s.t0->lo), to_string(s.t0->hi)};
        else
            sj["t0"] = nullptr;
        sj["t_star"] = to_string(s.t_star);
        sj["attained_on_ray1"] = s.attained_on_ray1;
        sj["value"] = to_string(dot(b.functionals[e], tangent_coords(m, b.eta[e])));
        x["sign"] = sj;
        edges.push_back(x);
    }
    j["edges"] = edges;
    return j.dump(1) + "\n";
}

AdaptedBasis basis_from_json(const GraphCurveModel& m, const std::string& text) {
    ordered_json j = parse(text);
    AdaptedBasis b;
    b.layout = tangent_layout(m);
    b.hom_dim = field(j, "hom_dim", [](const ordered_json& x) { return x.get<size_t>(); });
    for (const auto& p : field(j, "pgl", [](const ordered_json& x) { return x; })) b.pgl.push_back(images_from(m, p));
    const auto& edges = field(j, "edges", [](const ordered_json& x) { return x; });
    if (edges.size() != m.graph.edge_count()) throw MmError(ErrorCode::DimensionMismatch, "basis has the wrong edge count");
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto& x = edges[e];
        b.eta.push_back(images_from(m, field(x, "eta", [](const ordered_json& y) { return y; })));
        b.local.push_back(edge_local_data(m, e));
        b.functionals.push_back(node_functional(m, b.local.back()));
        const auto& sj = field(x, "sign", [](const ordered_json& y) { return y; });
        SignData s;
        s.s = sj.at("s").get<int>();
        if (!sj.at("t0").is_null())
            s.t0 = RootInterval{parse_rat(sj["t0"][0].get<std::string>()), parse_rat(sj["t0"][1].get<std::string>())};
        s.t_star = parse_rat(sj.at("t_star").get<std::string>());
        s.attained_on_ray1 = sj.at("attained_on_ray1").get<bool>();
        b.signs.push_back(s);
    }
    return b;
}

std::string deformation_to_json(const GraphCurveModel& m, const MMDeformation& d, const std::vector<std::string>& labels) {
    GraphFile gf = graph_view(m, labels);
    ordered_json j;
    j["vars"] = m.var_names;
    j["genus"] = d.certificate.genus;
    j["pairing"] = d.certificate.pairing.bits;
    j["cover_cycles"] = d.certificate.cover_cycles;
    ordered_json lam;
    for (size_t e = 0; e < d.certificate.lambda.size(); ++e) lam[edge_label(gf, e)] = to_string(d.certificate.lambda[e]);
    j["lambda"] = lam;
    ordered_json gens = ordered_json::array();
    for (size_t i = 0; i < d.ideal.base.size(); ++i)
        gens.push_back({render_poly(d.ideal.base[i], m.var_names), render_poly(d.ideal.first_order[i], m.var_names)});
    j["generators"] = gens;
    return j.dump(1) + "\n";
}

MMDeformation deformation_from_json(const GraphCurveModel& m, const std::string& text) {
    ordered_json j = parse(text);
    MMDeformation d;
    d.certificate.genus = field(j, "genus", [](const ordered_json& x) { return x.get<size_t>(); });
    d.certificate.pairing.bits = field(j, "pairing", [](const ordered_json& x) { return x.get<std::vector<uint8_t>>(); });
    d.certificate.cover_cycles = field(j, "cover_cycles", [](const ordered_json& x) { return x.get<size_t>(); });
    // lambda is keyed by edge label in edge order
    const ordered_json lam = field(j, "lambda", [](const ordered_json& x) { return x; });
    for (const auto& [k, v] : lam.items()) d.certificate.lambda.push_back(parse_rat(v.get<std::string>()));
    if (d.certificate.lambda.size() != m.graph.edge_count())
        throw MmError(ErrorCode::DimensionMismatch, "lambda has " + std::to_string(d.certificate.lambda.size()) + " entries");
    for (const auto& pair : field(j, "generators", [](const ordered_json& x) { return x; })) {
        d.ideal.base.push_back(parse_poly(pair.at(0).get<std::string>(), m.var_names));
        d.ideal.first_order.push_back(parse_poly(pair.at(1).get<std::string>(), m.var_names));
    }
    d.tangent.images = d.ideal.first_order;
    return d;
}

std::string model_to_m2(const GraphCurveModel& m) {
    std::string s = "R = QQ[";
    for (size_t i = 0; i < m.var_names.size(); ++i) s += (i ? ", " : "") + m.var_names[i];
    s += "];\nI = ideal(";
    for (size_t i = 0; i < m.generators.size(); ++i) s += (i ? ", " : "") + render_poly_m2(m.generators[i], m.var_names);
    return s + ");\n";
}

std::string basis_to_m2(const GraphCurveModel& m, const AdaptedBasis& b, const std::vector<std::string>& labels) {
    GraphFile gf = graph_view(m, labels);
    std::string s = model_to_m2(m);
    auto tuple = [&](const TangentVector& t) {
        std::string r = "(";
        for (size_t i = 0; i < t.images.size(); ++i) r += (i ? ", " : "") + render_poly_m2(t.images[i], m.var_names);
        return r + ")";
    };
    for (size_t k = 0; k < b.pgl.size(); ++k) s += "-- pgl " + std::to_string(k) + "\n" + tuple(b.pgl[k]) + "\n";
    for (size_t e = 0; e < b.eta.size(); ++e) s += "-- eta " + edge_label(gf, e) + "\n" + tuple(b.eta[e]) + "\n";
    return s;
}

}  // namespace mmc
