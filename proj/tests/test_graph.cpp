#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mmc/error.hpp"
#include "mmc/graph.hpp"
#include "mmc/graph_io.hpp"
#include "mmc/qmatrix.hpp"

#include <map>
#include <set>

using namespace mmc;

namespace {

GraphFile fixture(const std::string& name) { return load_graph_file(std::string(MMC_FIXTURE_DIR) + "/graphs/" + name); }

// Cycle count of G_rho straight from the definition: corners are 2-sets of edges at a vertex,
// {x,e} ~ {e,y} whenever {x,y} is one of the pairs in rho(e).
size_t oracle_cycle_count(const TrivalentGraph& g, const EdgePairing& rho) {
    std::map<std::pair<size_t, std::set<size_t>>, size_t> id;
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incident(v);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = i + 1; j < 3; ++j) id.emplace(std::make_pair(v, std::set<size_t>{inc[i], inc[j]}), id.size());
    }
    std::vector<std::vector<size_t>> adj(id.size());
    for (size_t e = 0; e < g.edge_count(); ++e) {
        for (auto pr : pairing_partition(g, rho, e)) {
            size_t a = id.at({g.edge(e).a, {e, pr[0]}});
            size_t b = id.at({g.edge(e).b, {e, pr[1]}});
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    std::vector<char> seen(adj.size(), 0);
    size_t comps = 0;
    for (size_t s = 0; s < adj.size(); ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            size_t x = stack.back();
            stack.pop_back();
            for (size_t y : adj[x])
                if (!seen[y]) seen[y] = 1, stack.push_back(y);
        }
    }
    return comps;
}

}  // namespace

TEST_CASE("validate genus of fixtures") {
    CHECK(validate(fixture("k4.json").graph) == 3);
    CHECK(validate(fixture("prism.json").graph) == 4);
    CHECK(validate(fixture("cube.json").graph) == 5);
    CHECK(validate(fixture("planar8.json").graph) == 5);
    CHECK(validate(fixture("k33.json").graph) == 4);
    CHECK(validate(fixture("petersen.json").graph) == 6);
    CHECK(validate(fixture("associahedron.json").graph) == 8);
}

TEST_CASE("validate rejects bad graphs") {
    auto code_of = [](const TrivalentGraph& g) {
        try {
            validate(g);
        } catch (const MmError& e) {
            return e.code();
        }
        return ErrorCode::InternalError;
    };
    CHECK(code_of(TrivalentGraph(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 3}})) == ErrorCode::NotSimple);
    CHECK(code_of(TrivalentGraph(4, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {1, 3}, {2, 3}})) == ErrorCode::NotSimple);
    CHECK(code_of(TrivalentGraph(4, {{0, 1}, {1, 2}, {2, 3}})) == ErrorCode::NotTrivalent);
    // two disjoint K4s
    CHECK(code_of(TrivalentGraph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                     {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}})) == ErrorCode::Disconnected);
    // two K4s with one edge subdivided each, joined by two edges: 2-connected only
    CHECK(code_of(TrivalentGraph(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 6},
                                     {4, 5}, {4, 6}, {5, 6}, {4, 7}, {5, 7}, {3, 7}})) ==
          ErrorCode::NotThreeConnected);
    CHECK_THROWS_AS(parse_graph_json("{\"vertices\": 2, \"edges\": [[0,1]"), MmError);
}

TEST_CASE("cycle basis is independent and closed") {
    for (const char* name : {"k4.json", "prism.json", "cube.json", "planar8.json", "associahedron.json"}) {
        auto g = fixture(name).graph;
        auto b = cycle_basis(g);
        CHECK(b.cycles.size() == static_cast<size_t>(g.genus()));
        QMatrix inc(b.cycles.size(), g.edge_count());
        for (size_t i = 0; i < b.cycles.size(); ++i)
            for (size_t e = 0; e < g.edge_count(); ++e) inc(i, e) = b.incidence[i][e];
        CHECK(mat_rank(inc) == b.cycles.size());
        // flow conservation at every vertex
        for (const auto& row : b.incidence) {
            for (size_t v = 0; v < g.vertex_count(); ++v) {
                int net = 0;
                for (size_t e : g.incident(v)) net += g.edge(e).a == v ? row[e] : -row[e];
                CHECK(net == 0);
            }
        }
        // consecutive steps share a vertex
        for (const auto& c : b.cycles) {
            for (size_t i = 0; i < c.steps.size(); ++i) {
                auto [e, d] = c.steps[i];
                auto [f, d2] = c.steps[(i + 1) % c.steps.size()];
                size_t head = d > 0 ? g.edge(e).b : g.edge(e).a;
                size_t tail = d2 > 0 ? g.edge(f).a : g.edge(f).b;
                CHECK(head == tail);
            }
        }
    }
}

TEST_CASE("pairing count") {
    CHECK(pairing_count(fixture("planar8.json").graph) == 4096);
    CHECK(pairing_count(fixture("k4.json").graph) == 64);
    CHECK(pairing_count(fixture("cube.json").graph) == 4096);
}

TEST_CASE("cover graph matches the definition oracle and r <= g+1") {
    for (const char* name : {"k4.json", "prism.json", "k33.json"}) {
        auto g = fixture(name).graph;
        for (uint64_t idx = 0; idx < (uint64_t{1} << g.edge_count()); ++idx) {
            auto rho = pairing_from_index(g, idx);
            auto cg = cover_graph(g, rho);
            REQUIRE(cg.cycle_count() == oracle_cycle_count(g, rho));
            REQUIRE(cg.cycle_count() <= static_cast<size_t>(g.genus()) + 1);
            std::vector<int> cover(g.edge_count(), 0);
            for (const auto& ce : cg.edges) ++cover[ce.base_edge];
            for (int c : cover) REQUIRE(c == 2);
        }
    }
}

TEST_CASE("r <= g+1 over all pairings of genus-5 graphs") {
    for (const char* name : {"cube.json", "planar8.json"}) {
        auto g = fixture(name).graph;
        size_t best = 0, hits = 0;
        for (uint64_t idx = 0; idx < 4096; ++idx) {
            size_t r = cover_graph(g, pairing_from_index(g, idx)).cycle_count();
            best = std::max(best, r);
            hits += r == 6;
        }
        CHECK(best == 6);
        CHECK(hits == 1);
    }
}

TEST_CASE("face double cover") {
    for (const char* name : {"k4.json", "prism.json", "cube.json", "planar8.json"}) {
        auto g = fixture(name).graph;
        auto res = face_double_cover(g);
        CHECK(res.solutions == 1);
        CHECK(cover_graph(g, res.pairing).cycle_count() == static_cast<size_t>(g.genus()) + 1);
    }
    auto k4 = fixture("k4.json").graph;
    auto cg = cover_graph(k4, face_double_cover(k4).pairing);
    for (const auto& c : cg.cycles) CHECK(c.size() == 3);

    auto cube = fixture("cube.json");
    CHECK(face_double_cover(cube.graph).pairing == face_cover_from_faces(cube.graph, *cube.faces));
    auto prism = fixture("prism.json");
    CHECK(face_double_cover(prism.graph).pairing == face_cover_from_faces(prism.graph, *prism.faces));
}

TEST_CASE("planar8 graph: planar pairing at edge 47") {
    auto f = fixture("planar8.json");
    auto rho = face_double_cover(f.graph).pairing;
    size_t e47 = *edge_by_label(f, "47");
    auto parts = pairing_partition(f.graph, rho, e47);
    std::set<std::set<std::string>> got;
    for (auto pr : parts) got.insert({edge_label(f, pr[0]), edge_label(f, pr[1])});
    CHECK(got == std::set<std::set<std::string>>{{"34", "78"}, {"45", "67"}});
}

TEST_CASE("non-planar graphs") {
    auto code_of = [](const TrivalentGraph& g) {
        try {
            face_double_cover(g);
        } catch (const MmError& e) {
            return e.code();
        }
        return ErrorCode::InternalError;
    };
    CHECK(code_of(fixture("k33.json").graph) == ErrorCode::NotPlanar);
    CHECK(code_of(fixture("petersen.json").graph) == ErrorCode::NotPlanar);
    CHECK_THROWS_AS(face_double_cover(fixture("petersen.json").graph, 1000), MmError);
}

TEST_CASE("associahedron facets give a face cover") {
    auto a = fixture("associahedron.json");
    auto rho = face_cover_from_faces(a.graph, *a.faces);
    CHECK(cover_graph(a.graph, rho).cycle_count() == 9);
    auto bad = *a.faces;
    bad.pop_back();
    CHECK_THROWS_AS(face_cover_from_faces(a.graph, bad), MmError);
}

TEST_CASE("orientability") {
    for (const char* name : {"k4.json", "prism.json", "cube.json", "planar8.json"}) {
        auto g = fixture(name).graph;
        auto o = orientability(g, face_double_cover(g).pairing);
        CHECK(o.a == 0);
        CHECK(o.euler_characteristic == 2);
    }
    for (const char* name : {"k4.json", "prism.json", "k33.json"}) {
        auto g = fixture(name).graph;
        size_t orientable = 0;
        for (uint64_t idx = 0; idx < (uint64_t{1} << g.edge_count()); ++idx) {
            auto o = orientability(g, pairing_from_index(g, idx));
            if (o.a == 0) {
                ++orientable;
                CHECK(o.euler_characteristic % 2 == 0);
                CHECK((o.cycles % 2) == ((static_cast<size_t>(g.genus()) + 1) % 2));
            }
        }
        CHECK(orientable > 0);
    }
}

TEST_CASE("graph JSON round trip") {
    auto f = fixture("planar8.json");
    auto again = parse_graph_json(graph_to_json(f));
    CHECK(again.graph == f.graph);
    CHECK(again.labels == f.labels);
}
