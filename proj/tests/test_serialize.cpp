#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mmc/error.hpp"
#include "mmc/graph_io.hpp"
#include "mmc/model_io.hpp"
#include "mmc/serialize.hpp"

#include "json.hpp"

using namespace mmc;

namespace {

std::string fx(const std::string& rel) { return std::string(MMC_FIXTURE_DIR) + "/" + rel; }

struct Fixture {
    GraphCurveModel model;
    std::vector<std::string> labels;
};

Fixture from_lines(const std::string& name) {
    auto gf = load_graph_file(fx("graphs/" + name + ".json"));
    return {model_from_lines(load_lines_file(fx("lines/" + name + ".json")), gf), gf.labels};
}

void check_same_model(const GraphCurveModel& a, const GraphCurveModel& b) {
    CHECK(a.graph == b.graph);
    CHECK(a.genus == b.genus);
    CHECK(a.nodes == b.nodes);
    CHECK(a.generators == b.generators);
    CHECK(a.var_names == b.var_names);
    CHECK(a.pairing == b.pairing);
    CHECK(a.pairing_is_planar == b.pairing_is_planar);
}

}  // namespace

TEST_CASE("model JSON round trip") {
    for (const char* name : {"k4", "prism", "cube", "planar8"}) {
        INFO(std::string(name));
        auto f = from_lines(name);
        const std::string text = model_to_json(f.model, f.labels);
        auto back = model_from_json(text);
        check_same_model(f.model, back.model);
        CHECK(back.labels == f.labels);
        CHECK(model_to_json(back.model, back.labels) == text);
    }
    auto graph_only = load_graph_file(fx("graphs/cube.json"));
    auto m = build_model(graph_only.graph, graph_only.faces);
    const std::string text = model_to_json(m, graph_only.labels);
    CHECK(model_to_json(model_from_json(text).model, graph_only.labels) == text);
}

TEST_CASE("model JSON rejects tampered nodes") {
    auto f = from_lines("k4");
    auto j = nlohmann::ordered_json::parse(model_to_json(f.model, f.labels));
    j["nodes"][0][0] = "7";
    CHECK_THROWS_AS(model_from_json(j.dump()), MmError);
}

TEST_CASE("basis JSON round trip") {
    for (const char* name : {"k4", "planar8"}) {
        INFO(std::string(name));
        auto f = from_lines(name);
        auto b = adapted_basis(f.model);
        const std::string text = basis_to_json(f.model, b, f.labels);
        auto back = basis_from_json(f.model, text);
        CHECK(back.pgl == b.pgl);
        CHECK(back.eta == b.eta);
        CHECK(back.hom_dim == b.hom_dim);
        for (size_t e = 0; e < b.signs.size(); ++e) {
            CHECK(back.signs[e].s == b.signs[e].s);
            CHECK(back.signs[e].t_star == b.signs[e].t_star);
            CHECK(back.signs[e].t0.has_value() == b.signs[e].t0.has_value());
        }
        CHECK(basis_to_json(f.model, back, f.labels) == text);
    }
}

TEST_CASE("deformation JSON round trip") {
    auto f = from_lines("planar8");
    auto b = adapted_basis(f.model);
    RatVec lambda(f.model.graph.edge_count(), Rat(1));
    lambda[2] = Rat(2);
    lambda[5] = Rat(1, 3);
    auto d = mm_deformation(f.model, b, lambda);
    const std::string text = deformation_to_json(f.model, d, f.labels);
    auto back = deformation_from_json(f.model, text);
    CHECK(back.ideal.base == d.ideal.base);
    CHECK(back.ideal.first_order == d.ideal.first_order);
    CHECK(back.certificate.lambda == d.certificate.lambda);
    CHECK(back.certificate.cover_cycles == d.certificate.cover_cycles);
    CHECK(deformation_to_json(f.model, back, f.labels) == text);
    // identical inputs give identical bytes
    CHECK(deformation_to_json(f.model, mm_deformation(f.model, adapted_basis(f.model), lambda), f.labels) == text);
}

TEST_CASE("Macaulay2 export") {
    auto f = from_lines("cube");
    const std::string m2 = model_to_m2(f.model);
    CHECK(m2.rfind("R = QQ[", 0) == 0);
    CHECK(m2.find("I = ideal(") != std::string::npos);
    auto b = adapted_basis(f.model);
    const std::string t = basis_to_m2(f.model, b, f.labels);
    size_t tuples = 0;
    for (size_t p = t.find("\n("); p != std::string::npos; p = t.find("\n(", p + 1)) ++tuples;
    CHECK(tuples == b.pgl.size() + b.eta.size());
}
