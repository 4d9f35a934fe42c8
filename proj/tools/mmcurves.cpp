#include "mmc/certify.hpp"
#include "mmc/cubic.hpp"
#include "mmc/error.hpp"
#include "mmc/graph_io.hpp"
#include "mmc/model_io.hpp"
#include "mmc/poly_io.hpp"
#include "mmc/serialize.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>

using namespace mmc;

namespace {

struct ModelOptions {
    std::string input;
    std::string graph;      // expected graph (edge order and labels) for a lines file
    std::string ideal;      // generators to adopt
    std::string reference;  // printed edge vectors to adopt
};

struct Loaded {
    GraphCurveModel model;
    std::vector<std::string> labels;
};

void add_model_options(CLI::App* app, ModelOptions& o) {
    app->add_option("input", o.input, "graph JSON, lines JSON or model JSON")->required()->check(CLI::ExistingFile);
    app->add_option("--graph", o.graph, "graph JSON fixing edge order and labels of a lines file")->check(CLI::ExistingFile);
    app->add_option("--ideal", o.ideal, "polynomial file with generators to use")->check(CLI::ExistingFile);
}

Loaded load_model(const ModelOptions& o) {
    const std::string text = read_text_file(o.input);
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw MmError(ErrorCode::ParseError, o.input + ": not valid JSON");
    Loaded out;
    if (j.contains("lines")) {
        LinesFile lf = parse_lines_json(text);
        std::optional<GraphFile> expected;
        if (!o.graph.empty()) expected = load_graph_file(o.graph);
        out.model = model_from_lines(lf, expected);
        if (expected)
            out.labels = expected->labels;
        else if (lf.labels.size() == out.model.graph.vertex_count())
            out.labels = lf.labels;
    } else if (j.contains("generators")) {
        ModelFile mf = model_from_json(text);
        out.model = std::move(mf.model);
        out.labels = mf.labels;
    } else {
        GraphFile gf = parse_graph_json(text);
        out.model = build_model(gf.graph, gf.faces);
        out.labels = gf.labels;
    }
    if (!o.ideal.empty()) {
        PolyFile pf = load_poly_file(o.ideal);
        if (pf.vars.size() != out.model.nvars())
            throw MmError(ErrorCode::DimensionMismatch, "ideal file has " + std::to_string(pf.vars.size()) + " variables");
        std::vector<size_t> map;
        for (size_t i = 0; i < pf.all_names().size(); ++i) map.push_back(i);
        std::vector<MPoly> gens;
        for (const auto& p : pf.polys) gens.push_back(p.remap(pf.vars.size(), map));
        set_generators(out.model, gens);
        out.model.var_names = pf.vars;
    } else if (!o.reference.empty()) {
        // reference vectors are written against the reference generators
        auto ref = nlohmann::json::parse(read_text_file(o.reference));
        if (ref.contains("generators") && ref.contains("vars")) {
            auto vars = ref["vars"].get<std::vector<std::string>>();
            if (vars.size() != out.model.nvars())
                throw MmError(ErrorCode::DimensionMismatch, o.reference + ": wrong number of variables");
            std::vector<MPoly> gens;
            for (const auto& s : ref["generators"]) gens.push_back(parse_poly(s.get<std::string>(), vars));
            set_generators(out.model, gens);
            out.model.var_names = vars;
        }
    }
    if (out.labels.size() != out.model.graph.vertex_count()) {
        out.labels.clear();
        for (size_t v = 0; v < out.model.graph.vertex_count(); ++v) out.labels.push_back(std::to_string(v));
    }
    return out;
}

GraphFile view(const Loaded& l) { return GraphFile{l.model.graph, std::nullopt, l.labels}; }

/// Replaces basis edge vectors by reference ones ({"eta": {label: [images]}}) when all ratios are positive.
void adopt_reference(const Loaded& l, AdaptedBasis& b, const std::string& path) {
    auto j = nlohmann::json::parse(read_text_file(path));
    if (!j.contains("eta")) throw MmError(ErrorCode::ParseError, path + ": missing \"eta\"");
    std::vector<std::optional<TangentVector>> refs(l.model.graph.edge_count());
    GraphFile gf = view(l);
    for (auto& [label, row] : j["eta"].items()) {
        auto id = edge_by_label(gf, label);
        if (!id) throw MmError(ErrorCode::InvalidArgument, "unknown edge label " + label);
        std::vector<MPoly> images;
        for (const auto& s : row) images.push_back(parse_poly(s.get<std::string>(), l.model.var_names));
        refs[*id] = reduce_tangent(l.model, images);
    }
    auto match = adopt_reference_edges(l.model, b, refs);
    for (size_t e = 0; e < refs.size(); ++e) {
        if (!refs[e]) continue;
        if (!match.ratio[e] || sgn(*match.ratio[e]) <= 0)
            throw MmError(ErrorCode::InvalidArgument, "reference vector for edge " + edge_label(gf, e) +
                                                          " is not a positive multiple of the computed one");
    }
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw MmError(ErrorCode::InvalidArgument, "cannot write " + path);
    f << text;
}

std::vector<EpsPoly> load_family(const std::string& path, const GraphCurveModel& m) {
    PolyFile pf = load_poly_file(path);
    if (pf.vars.size() != m.nvars()) throw MmError(ErrorCode::DimensionMismatch, "family has the wrong number of variables");
    if (!pf.params.empty()) throw MmError(ErrorCode::InvalidArgument, "family has symbolic parameters; use hyperplanes");
    std::vector<EpsPoly> out;
    for (const auto& p : pf.polys) out.push_back(split_eps(p, m.nvars()));
    return out;
}

std::string pairs_text(const GraphFile& gf, const EdgePairing& rho, size_t e) {
    auto parts = pairing_partition(gf.graph, rho, e);
    return "{{" + edge_label(gf, parts[0][0]) + "," + edge_label(gf, parts[0][1]) + "},{" + edge_label(gf, parts[1][0]) + "," +
           edge_label(gf, parts[1][1]) + "}}";
}

int cmd_graph(const std::string& path, std::optional<uint64_t> budget) {
    GraphFile gf = load_graph_file(path);
    const int g = validate(gf.graph);
    std::cout << "vertices " << gf.graph.vertex_count() << "\nedges " << gf.graph.edge_count() << "\ngenus " << g
              << "\npairings " << pairing_count(gf.graph).get_str() << "\n";
    EdgePairing rho;
    if (gf.faces) {
        rho = face_cover_from_faces(gf.graph, *gf.faces);
        std::cout << "faces " << gf.faces->size() << " (given)\n";
    } else {
        auto res = face_double_cover(gf.graph, budget);
        rho = res.pairing;
        std::cout << "faces " << g + 1 << " (unique: " << (res.solutions == 1 ? "yes" : "no") << ")\n";
    }
    std::cout << "planar yes\n";
    for (size_t e = 0; e < gf.graph.edge_count(); ++e)
        std::cout << "rho(" << edge_label(gf, e) << ") = " << pairs_text(gf, rho, e) << "\n";
    auto o = orientability(gf.graph, rho);
    std::cout << "cover cycles " << o.cycles << "\norientable " << (o.a == 0 ? "yes" : "no") << " (a = " << o.a
              << ", euler characteristic " << o.euler_characteristic << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph curves and first-order MM deformations"};
    app.require_subcommand(1);

    std::string graph_path;
    std::optional<uint64_t> budget;
    auto* graph = app.add_subcommand("graph", "validate a trivalent graph and find its face double cover");
    graph->add_option("input", graph_path, "graph JSON")->required()->check(CLI::ExistingFile);
    graph->add_option("--budget", budget, "maximum number of pairings to search (default MM_SEARCH_BUDGET or 2^24)");

    ModelOptions curve_opts;
    bool curve_m2 = false;
    std::string curve_json;
    auto* curve = app.add_subcommand("curve", "build the graph curve model and its ideal");
    add_model_options(curve, curve_opts);
    curve->add_flag("--m2", curve_m2, "print the ideal as Macaulay2 input");
    curve->add_option("--json", curve_json, "write the model JSON to this file ('-' for stdout)");

    ModelOptions basis_opts;
    bool basis_m2 = false;
    std::string basis_json;
    auto* basis = app.add_subcommand("basis", "compute the adapted basis of the tangent space");
    add_model_options(basis, basis_opts);
    basis->add_option("--reference", basis_opts.reference, "JSON with reference edge vectors to adopt")->check(CLI::ExistingFile);
    basis->add_flag("--m2", basis_m2, "print the basis as Macaulay2 tuples");
    basis->add_option("--json", basis_json, "write the basis JSON to this file ('-' for stdout)");

    ModelOptions deform_opts;
    std::vector<std::string> lambda_args;
    std::string deform_json;
    auto* deform = app.add_subcommand("deform", "first-order MM deformation for positive edge coefficients");
    add_model_options(deform, deform_opts);
    deform->add_option("--reference", deform_opts.reference, "JSON with reference edge vectors to adopt")->check(CLI::ExistingFile);
    deform->add_option("--lambda", lambda_args, "edge coefficients as label=value (default 1 for every edge)");
    deform->add_option("--json", deform_json, "write the certificate JSON to this file ('-' for stdout)");

    ModelOptions dec_opts;
    std::string family_path;
    std::string smooth_eps;
    int smooth_slices = 2;
    auto* dec = app.add_subcommand("decompose", "decompose the tangent vector of an eps-family in the adapted basis");
    add_model_options(dec, dec_opts);
    dec->add_option("family", family_path, "polynomial file of the family (variables and eps)")->required()->check(CLI::ExistingFile);
    dec->add_option("--reference", dec_opts.reference, "JSON with reference edge vectors to adopt")->check(CLI::ExistingFile);
    dec->add_option("--smooth-eps", smooth_eps, "spot-check smoothness of the family at this eps");
    dec->add_option("--slices", smooth_slices, "number of random slices for the spot check")->capture_default_str();

    ModelOptions hyp_opts;
    std::string param_family;
    auto* hyp = app.add_subcommand("hyperplanes", "edge functionals on a family with symbolic parameters");
    add_model_options(hyp, hyp_opts);
    hyp->add_option("family", param_family, "polynomial file with params: and eps")->required()->check(CLI::ExistingFile);

    std::string cubic_path;
    auto* cub = app.add_subcommand("cubic", "genus-one MM test for a plane cubic over Q(eps)");
    cub->add_option("input", cubic_path, "polynomial file with vars x y z and optional eps")->required()->check(CLI::ExistingFile);

    std::string quartic_path;
    std::string root_width = "1/100000000000";
    auto* disc = app.add_subcommand("discriminant", "discriminant in eps of a plane quartic or a genus-four (quadric, cubic) family");
    disc->add_option("input", quartic_path, "polynomial file: one quartic in x y z, or a quadric and a cubic in x y z w")
        ->required()
        ->check(CLI::ExistingFile);
    disc->add_option("--width", root_width, "width of the isolating interval for the smallest positive root")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage problems are input errors
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (graph->parsed()) return cmd_graph(graph_path, budget);

        if (curve->parsed()) {
            Loaded l = load_model(curve_opts);
            const auto& m = l.model;
            std::cout << "genus " << m.genus << "\nlines " << m.graph.vertex_count() << "\nnodes " << m.nodes.size() << "\n";
            GraphFile gf = view(l);
            for (size_t e = 0; e < m.nodes.size(); ++e) {
                std::cout << "P" << edge_label(gf, e) << " = (";
                for (size_t i = 0; i < m.nodes[e].size(); ++i) std::cout << (i ? ", " : "") << to_string(m.nodes[e][i]);
                std::cout << ")\n";
            }
            std::cout << "generators " << m.generators.size() << "\n";
            for (const auto& f : m.generators) std::cout << "  " << render_poly(f, m.var_names) << "\n";
            if (curve_m2) std::cout << model_to_m2(m);
            if (!curve_json.empty()) write_out(curve_json, model_to_json(m, l.labels));
            return 0;
        }

        auto basis_for = [](const Loaded& l, const ModelOptions& o) {
            AdaptedBasis b = adapted_basis(l.model);
            if (!o.reference.empty()) adopt_reference(l, b, o.reference);
            return b;
        };

        if (basis->parsed()) {
            Loaded l = load_model(basis_opts);
            AdaptedBasis b = basis_for(l, basis_opts);
            GraphFile gf = view(l);
            std::cout << "hom dimension " << b.hom_dim << "\npgl vectors " << b.pgl.size() << "\nedge vectors " << b.eta.size()
                      << "\n";
            for (size_t e = 0; e < b.eta.size(); ++e) {
                const auto& s = b.signs[e];
                std::cout << "eta" << edge_label(gf, e) << " s=" << (s.s > 0 ? "+1" : "-1") << " t0=";
                if (s.t0)
                    std::cout << "(" << to_string(s.t0->lo) << ", " << to_string(s.t0->hi) << "]";
                else
                    std::cout << "inf";
                if (s.attained_on_ray1) std::cout << " [F(t0) = 0 on ray 1]";
                std::cout << " : (";
                for (size_t i = 0; i < b.eta[e].images.size(); ++i)
                    std::cout << (i ? ", " : "") << render_poly(b.eta[e].images[i], l.model.var_names);
                std::cout << ")\n";
            }
            if (basis_m2) std::cout << basis_to_m2(l.model, b, l.labels);
            if (!basis_json.empty()) write_out(basis_json, basis_to_json(l.model, b, l.labels));
            return 0;
        }

        if (deform->parsed()) {
            Loaded l = load_model(deform_opts);
            AdaptedBasis b = basis_for(l, deform_opts);
            GraphFile gf = view(l);
            RatVec lambda(l.model.graph.edge_count(), Rat(1));
            for (const auto& a : lambda_args) {
                auto eq = a.find('=');
                if (eq == std::string::npos) throw MmError(ErrorCode::ParseError, "expected label=value, got " + a);
                auto id = edge_by_label(gf, a.substr(0, eq));
                if (!id) throw MmError(ErrorCode::InvalidArgument, "unknown edge label " + a.substr(0, eq));
                lambda[*id] = parse_rat(a.substr(eq + 1));
            }
            MMDeformation d = mm_deformation(l.model, b, lambda);
            std::cout << "cover cycles " << d.certificate.cover_cycles << "\n";
            for (size_t i = 0; i < d.ideal.base.size(); ++i)
                std::cout << render_poly(d.ideal.base[i], l.model.var_names) << " + eps*("
                          << render_poly(d.ideal.first_order[i], l.model.var_names) << ")\n";
            if (!deform_json.empty()) write_out(deform_json, deformation_to_json(l.model, d, l.labels));
            return 0;
        }

        if (dec->parsed()) {
            Loaded l = load_model(dec_opts);
            AdaptedBasis b = basis_for(l, dec_opts);
            GraphFile gf = view(l);
            auto family = load_family(family_path, l.model);
            TangentVector t = family_tangent(l.model, family);
            std::cout << "eta = (";
            for (size_t i = 0; i < t.images.size(); ++i) std::cout << (i ? ", " : "") << render_poly(t.images[i], l.model.var_names);
            std::cout << ")\n";
            ConeCheck c = mm_cone_check(l.model, b, t);
            for (size_t e = 0; e < c.decomposition.lambda.size(); ++e)
                std::cout << "lambda" << edge_label(gf, e) << " = " << to_string(c.decomposition.lambda[e]) << "\n";
            std::cout << cone_status_name(c.status);
            for (size_t k = 0; k < c.edges.size(); ++k) std::cout << (k ? ", " : " ") << edge_label(gf, c.edges[k]);
            std::cout << "\n";
            if (!smooth_eps.empty()) {
                const Rat eps = parse_rat(smooth_eps);
                std::vector<MPoly> gens;
                for (const auto& f : family) {
                    MPoly g(l.model.nvars());
                    Rat pw(1);
                    for (const auto& c : f.coeffs) {
                        if (!c.is_zero()) g += c * pw;
                        pw *= eps;
                    }
                    gens.push_back(g);
                }
                auto rep = spot_smoothness_sliced(gens, smooth_slices);
                std::cout << "spot check at eps=" << smooth_eps << ": " << rep.points << " points, " << rep.singular
                          << " singular\n";
                for (const auto& n : rep.notes) std::cout << "  " << n << "\n";
                if (!rep.ok()) return 2;
            }
            return 0;
        }

        if (hyp->parsed()) {
            Loaded l = load_model(hyp_opts);
            AdaptedBasis b = adapted_basis(l.model);
            GraphFile gf = view(l);
            PolyFile pf = load_poly_file(param_family);
            if (pf.vars.size() != l.model.nvars()) throw MmError(ErrorCode::DimensionMismatch, "family has the wrong number of variables");
            ParamFamily fam{pf.vars.size(), pf.params.size(), pf.polys};
            auto forms = hyperplanes_on_family(l.model, b, fam);
            std::vector<std::string> names{"1"};
            names.insert(names.end(), pf.params.begin(), pf.params.end());
            for (size_t e = 0; e < forms.size(); ++e) {
                MPoly f(pf.params.size());
                for (size_t p = 0; p < pf.params.size(); ++p) f += MPoly::variable(pf.params.size(), p) * forms[e][p + 1];
                f += MPoly::constant(pf.params.size(), forms[e][0]);
                std::cout << "h" << edge_label(gf, e) << " = " << render_poly(f, pf.params) << "\n";
            }
            return 0;
        }

        if (cub->parsed()) {
            PolyFile pf = load_poly_file(cubic_path);
            if (pf.vars.size() != 3 || !pf.params.empty() || pf.polys.size() != 1)
                throw MmError(ErrorCode::InvalidArgument, "expected one cubic in three variables");
            auto r = genus1_mm_test(cubic_from_poly(pf.polys[0]));
            std::cout << "discriminant " << r.invariants.discriminant.to_string() << "\n";
            std::cout << "aronhold " << r.invariants.aronhold.to_string() << "\n";
            std::cout << "j " << r.invariants.j.to_string() << "\n";
            std::cout << "sign(discriminant) " << r.discriminant_sign << "\nval(j) " << r.j_valuation << "\n";
            std::cout << verdict_name(r.verdict) << "\n";
            return r.verdict == Genus1Verdict::MM ? 0 : 2;
        }

        if (disc->parsed()) {
            PolyFile pf = load_poly_file(quartic_path);
            UniPoly d;
            if (pf.vars.size() == 3 && pf.params.empty() && pf.polys.size() == 1)
                d = quartic_family_discriminant(split_eps(pf.polys[0], 3));
            else if (pf.vars.size() == 4 && pf.params.empty() && pf.polys.size() == 2)
                d = double_cover_discriminant(split_eps(pf.polys[0], 4), split_eps(pf.polys[1], 4));
            else
                throw MmError(ErrorCode::InvalidArgument, "expected a quartic in three variables or a quadric and a cubic in four");
            std::cout << "order " << d.order() << "\nlowest " << to_string(d.lowest_coefficient()) << "\ndegree " << d.degree()
                      << "\n";
            auto iv = isolate_min_positive_root(squarefree_part(d), parse_rat(root_width));
            if (iv)
                std::cout << "smallest positive root in (" << to_string(iv->lo) << ", " << to_string(iv->hi) << "] ~ "
                          << std::setprecision(12) << Rat((iv->lo + iv->hi) / 2).get_d() << "\n";
            else
                std::cout << "no positive root\n";
            return 0;
        }
    } catch (const MmError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return 0;
}
