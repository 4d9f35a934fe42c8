#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mmc/curve_model.hpp"
#include "mmc/error.hpp"
#include "mmc/graph_io.hpp"
#include "mmc/model_io.hpp"
#include "mmc/poly_io.hpp"

#include "json.hpp"

using namespace mmc;

namespace {

std::string fx(const std::string& rel) { return std::string(MMC_FIXTURE_DIR) + "/" + rel; }

GraphFile graph(const std::string& name) { return load_graph_file(fx("graphs/" + name)); }

void check_dimensions(const GraphCurveModel& m) {
    const int g = m.genus;
    CHECK(m.ideal_piece(2).dim() == static_cast<size_t>((g - 2) * (g - 3) / 2));
    for (int d = 2; d <= 4; ++d) CHECK(m.ideal_piece(d).quotient_dim() == static_cast<size_t>((2 * g - 2) * d - g + 1));
    for (const auto& f : m.generators) {
        for (size_t v = 0; v < m.graph.vertex_count(); ++v)
            for (const auto& pt : m.line_points(v, f.degree() + 1)) CHECK(f.eval(pt) == 0);
    }
}

void check_local_data(const GraphCurveModel& m) {
    for (size_t e = 0; e < m.graph.edge_count(); ++e) {
        auto d = edge_local_data(m, e);
        CHECK(d.P == add(d.P1, d.P1p));
        CHECK(d.P == add(d.P2, d.P2p));
        CHECK(m.in_ideal(d.F));
        CHECK(d.f.eval(d.P) > 0);
        CHECK(d.l1.eval(d.P2) > 0);
        CHECK(d.l2.eval(d.P1) > 0);
        CHECK(d.l1.eval(d.P) == 0);
        CHECK(d.l1.eval(d.P1) == 0);
        CHECK(d.l2.eval(d.P2) == 0);
        CHECK(d.q.size() == static_cast<size_t>(m.genus - 3));
        for (const auto& q : d.q) {
            CHECK(q.eval(d.P) == 0);
            CHECK(q.eval(d.P1) == 0);
            CHECK(q.eval(d.P2) == 0);
        }
        for (const auto& lf : d.f_factors) CHECK(lf.eval(d.P) != 0);
        // {e1, e2} is a pair of the planar pairing
        auto parts = pairing_partition(m.graph, m.pairing, e);
        CHECK(parts[0][0] == d.e1);
        CHECK(parts[0][1] == d.e2);
    }
}

}  // namespace

TEST_CASE("K4 model") {
    auto m = build_model(graph("k4.json").graph);
    CHECK(m.genus == 3);
    CHECK(m.nodes.size() == 6);
    for (const auto& p : m.nodes) CHECK_FALSE(is_zero(p));
    REQUIRE(m.generators.size() == 1);
    CHECK(m.generators[0].degree() == 4);
    check_dimensions(m);
    check_local_data(m);
    // F is a multiple of the quartic and f is a product of the two opposite line forms
    for (size_t e = 0; e < 6; ++e) {
        auto d = edge_local_data(m, e);
        CHECK(d.f_factors.size() == 2);
        MPoly q = m.generators[0];
        Rat s = d.F.leading_coefficient() / q.leading_coefficient();
        CHECK(d.F == q * s);
    }
}

TEST_CASE("K4 from four lines gives the six printed nodes") {
    auto lines = load_lines_file(fx("lines/k4.json"));
    auto m = model_from_lines(lines);
    auto ref = nlohmann::json::parse(read_text_file(fx("reference/k4_nodes.json")));
    std::vector<RatVec> want;
    for (const auto& n : ref["nodes"]) {
        RatVec v;
        for (const auto& x : n) v.push_back(parse_rat(x.get<std::string>()));
        want.push_back(v);
    }
    CHECK(m.nodes.size() == 6);
    for (const auto& w : want) {
        bool found = false;
        for (const auto& p : m.nodes) found |= projectively_equal(p, w);
        CHECK(found);
    }
    REQUIRE(m.generators.size() == 1);
    MPoly expect = parse_poly("x*y*z*(x+y+z)", lines.vars);
    CHECK(m.generators[0] * (expect.leading_coefficient() / m.generators[0].leading_coefficient()) == expect);
}

TEST_CASE("prism and cube models") {
    for (const char* name : {"prism.json", "cube.json"}) {
        auto m = build_model(graph(name).graph);
        check_dimensions(m);
        check_local_data(m);
    }
}

TEST_CASE("cube lines give the three printed quadrics") {
    auto lines = load_lines_file(fx("lines/cube.json"));
    auto m = model_from_lines(lines);
    CHECK(m.genus == 5);
    CHECK(m.graph.edge_count() == 12);
    CHECK(m.pairing_is_planar);
    REQUIRE(m.generators.size() == 3);
    SpanBuilder sb(m.ideal_piece(2).basis->size());
    for (const auto& f : m.generators) sb.add(m.ideal_piece(2).basis->coords(f));
    for (const char* s : {"x*y", "z*v", "w*(x+y+z+v+w)"})
        CHECK(sb.contains(m.ideal_piece(2).basis->coords(parse_poly(s, lines.vars))));
    set_generators(m, {parse_poly("x*y", lines.vars), parse_poly("z*v", lines.vars),
                       parse_poly("w*(x+y+z+v+w)", lines.vars)});
    check_local_data(m);
}

TEST_CASE("planar8 lines: graph, nodes and ideal") {
    auto lines = load_lines_file(fx("lines/planar8.json"));
    auto gf = graph("planar8.json");
    auto m = model_from_lines(lines, gf);
    CHECK(m.graph == gf.graph);
    auto ref = nlohmann::json::parse(read_text_file(fx("reference/planar8.json")));
    for (auto& [label, vec] : ref["nodes"].items()) {
        RatVec v;
        for (const auto& x : vec) v.push_back(parse_rat(x.get<std::string>()));
        auto id = edge_by_label(gf, label);
        REQUIRE(id.has_value());
        CHECK(projectively_equal(m.nodes[*id], v));
    }
    check_dimensions(m);
    int quadrics = 0, cubics = 0;
    for (const auto& f : m.generators) (f.degree() == 2 ? quadrics : cubics)++;
    CHECK(quadrics == 3);
    CHECK(cubics == 2);
    auto printed = load_poly_file(fx("families/planar8_ideal.txt"));
    std::vector<MPoly> gens;
    for (const auto& p : printed.polys) gens.push_back(p.remap(5, {0, 1, 2, 3, 4, 5}));
    set_generators(m, gens);
    check_local_data(m);
    // dropping a cubic breaks generation
    auto fewer = gens;
    fewer.pop_back();
    CHECK_THROWS_AS(set_generators(m, fewer), MmError);
}

TEST_CASE("representative negation only flips signs consistently") {
    auto m = build_model(graph("cube.json").graph);
    for (size_t e = 0; e < m.graph.edge_count(); ++e) {
        auto a = edge_local_data(m, e);
        auto b = edge_local_data(m, e, true);
        CHECK(b.P == scaled(a.P, -1));
        CHECK(b.P1 == scaled(a.P1, -1));
        CHECK(b.f.eval(b.P) > 0);
        const int k = a.f.degree();
        CHECK(b.F == a.F * Rat(k % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("ingest rejects non-graph-curves") {
    LinesFile bad = load_lines_file(fx("lines/k4.json"));
    bad.lines.pop_back();
    CHECK_THROWS_AS(model_from_lines(bad), MmError);
}

TEST_CASE("genus 8 model") {
    auto gf = graph("associahedron.json");
    auto m = build_model(gf.graph, gf.faces);
    CHECK(m.generators.size() == 15);
    check_dimensions(m);
}
