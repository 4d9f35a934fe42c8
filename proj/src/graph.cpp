#include "mmc/graph.hpp"

#include "mmc/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

namespace mmc {

TrivalentGraph::TrivalentGraph(size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), incident_(vertex_count) {
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.a >= vertex_count_ || e.b >= vertex_count_)
            throw MmError(ErrorCode::InvalidArgument, "edge " + std::to_string(i) + " has an endpoint out of range");
        incident_[e.a].push_back(i);
        if (e.b != e.a) incident_[e.b].push_back(i);
    }
}

size_t TrivalentGraph::other_end(size_t edge_id, size_t v) const {
    const Edge& e = edges_.at(edge_id);
    if (e.a == v) return e.b;
    if (e.b == v) return e.a;
    throw MmError(ErrorCode::InvalidArgument, "vertex not on edge");
}

std::optional<size_t> TrivalentGraph::edge_between(size_t u, size_t v) const {
    for (size_t id : incident_.at(u)) {
        if (other_end(id, u) == v) return id;
    }
    return std::nullopt;
}

int TrivalentGraph::genus() const {
    return static_cast<int>(edges_.size()) - static_cast<int>(vertex_count_) + 1;
}

bool TrivalentGraph::operator==(const TrivalentGraph& o) const {
    if (vertex_count_ != o.vertex_count_ || edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].a != o.edges_[i].a || edges_[i].b != o.edges_[i].b) return false;
    }
    return true;
}

namespace {

bool connected_without(const TrivalentGraph& g, size_t skip1, size_t skip2) {
    const size_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    size_t start = n;
    size_t alive = 0;
    for (size_t v = 0; v < n; ++v) {
        if (v == skip1 || v == skip2) continue;
        ++alive;
        if (start == n) start = v;
    }
    if (alive == 0) return true;
    std::deque<size_t> queue{start};
    seen[start] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        size_t v = queue.front();
        queue.pop_front();
        for (size_t id : g.incident(v)) {
            size_t w = g.other_end(id, v);
            if (w == skip1 || w == skip2 || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            queue.push_back(w);
        }
    }
    return reached == alive;
}

}  // namespace

int validate(const TrivalentGraph& g) {
    const size_t n = g.vertex_count();
    for (size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.a == e.b) throw MmError(ErrorCode::NotSimple, "edge " + std::to_string(i) + " is a loop");
        for (size_t j = 0; j < i; ++j) {
            const Edge& f = g.edge(j);
            if ((f.a == e.a && f.b == e.b) || (f.a == e.b && f.b == e.a))
                throw MmError(ErrorCode::NotSimple,
                              "edges " + std::to_string(j) + " and " + std::to_string(i) + " are parallel");
        }
    }
    for (size_t v = 0; v < n; ++v) {
        if (g.incident(v).size() != 3)
            throw MmError(ErrorCode::NotTrivalent, "vertex " + std::to_string(v) + " has degree " +
                                                      std::to_string(g.incident(v).size()));
    }
    if (!connected_without(g, n, n)) throw MmError(ErrorCode::Disconnected, "graph is not connected");
    if (g.genus() < 3) throw MmError(ErrorCode::GenusTooSmall, "genus must be at least 3");
    for (size_t u = 0; u < n; ++u) {
        for (size_t v = u + 1; v < n; ++v) {
            if (!connected_without(g, u, v))
                throw MmError(ErrorCode::NotThreeConnected, "removing vertices " + std::to_string(u) + " and " +
                                                                std::to_string(v) + " disconnects the graph");
        }
    }
    return g.genus();
}

OrientedCycleBasis cycle_basis(const TrivalentGraph& g) {
    const size_t n = g.vertex_count();
    const size_t inf = n;
    std::vector<size_t> parent_edge(n, SIZE_MAX), depth(n, inf);
    std::vector<char> tree(g.edge_count(), 0);
    std::deque<size_t> queue{0};
    depth[0] = 0;
    while (!queue.empty()) {
        size_t v = queue.front();
        queue.pop_front();
        for (size_t id : g.incident(v)) {
            size_t w = g.other_end(id, v);
            if (depth[w] != inf) continue;
            depth[w] = depth[v] + 1;
            parent_edge[w] = id;
            tree[id] = 1;
            queue.push_back(w);
        }
    }
    auto step = [&](size_t id, size_t from) { return std::make_pair(id, g.edge(id).a == from ? 1 : -1); };

    OrientedCycleBasis basis;
    for (size_t id = 0; id < g.edge_count(); ++id) {
        if (tree[id]) continue;
        const Edge& e = g.edge(id);
        // a -> b along the edge, then b up to the common ancestor and down to a
        std::vector<std::pair<size_t, int>> up_b, up_a;
        size_t x = e.b, y = e.a;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                size_t pe = parent_edge[x];
                up_b.push_back(step(pe, x));
                x = g.other_end(pe, x);
            } else {
                size_t pe = parent_edge[y];
                up_a.push_back(step(pe, y));
                y = g.other_end(pe, y);
            }
        }
        OrientedCycle c;
        c.steps.push_back({id, 1});
        for (auto& s : up_b) c.steps.push_back(s);
        for (auto it = up_a.rbegin(); it != up_a.rend(); ++it) c.steps.push_back({it->first, -it->second});
        std::vector<int> inc(g.edge_count(), 0);
        for (auto [eid, dir] : c.steps) inc[eid] += dir;
        basis.cycles.push_back(std::move(c));
        basis.incidence.push_back(std::move(inc));
    }
    return basis;
}

namespace {

std::array<size_t, 2> others_at(const TrivalentGraph& g, size_t v, size_t e) {
    std::array<size_t, 2> out{};
    size_t k = 0;
    for (size_t id : g.incident(v)) {
        if (id != e) out.at(k++) = id;
    }
    return out;
}

void check_pairing(const TrivalentGraph& g, const EdgePairing& rho) {
    if (rho.bits.size() != g.edge_count())
        throw MmError(ErrorCode::InvalidPairing, "pairing has " + std::to_string(rho.bits.size()) +
                                                     " entries for " + std::to_string(g.edge_count()) + " edges");
    for (auto b : rho.bits) {
        if (b > 1) throw MmError(ErrorCode::InvalidPairing, "pairing bits must be 0 or 1");
    }
}

}  // namespace

std::array<std::array<size_t, 2>, 2> pairing_partition(const TrivalentGraph& g, const EdgePairing& rho, size_t e) {
    const Edge& ed = g.edge(e);
    auto at = others_at(g, ed.a, e);
    auto bt = others_at(g, ed.b, e);
    if (rho.bits.at(e) == 0) return {{{at[0], bt[0]}, {at[1], bt[1]}}};
    return {{{at[0], bt[1]}, {at[1], bt[0]}}};
}

uint8_t pairing_bit_for(const TrivalentGraph& g, size_t e, size_t x, size_t y) {
    const Edge& ed = g.edge(e);
    auto at = others_at(g, ed.a, e);
    auto bt = others_at(g, ed.b, e);
    size_t ia = at[0] == x ? 0 : (at[1] == x ? 1 : 2);
    size_t ib = bt[0] == y ? 0 : (bt[1] == y ? 1 : 2);
    if (ia == 2 || ib == 2) throw MmError(ErrorCode::InvalidPairing, "edges do not meet the endpoints of the edge");
    return ia == ib ? 0 : 1;
}

EdgePairing pairing_from_index(const TrivalentGraph& g, uint64_t index) {
    EdgePairing rho;
    rho.bits.resize(g.edge_count());
    for (size_t i = 0; i < g.edge_count(); ++i) rho.bits[i] = static_cast<uint8_t>((index >> i) & 1U);
    return rho;
}

size_t corner_index(const TrivalentGraph& g, size_t v, size_t e, size_t f) {
    const auto& inc = g.incident(v);
    if (e > f) std::swap(e, f);
    size_t k = 0;
    for (size_t i = 0; i < inc.size(); ++i) {
        for (size_t j = i + 1; j < inc.size(); ++j, ++k) {
            if (inc[i] == e && inc[j] == f) return 3 * v + k;
        }
    }
    throw MmError(ErrorCode::InvalidPairing, "edges do not form a corner at the vertex");
}

namespace {

std::vector<CoverEdge> cover_edges(const TrivalentGraph& g, const EdgePairing& rho) {
    std::vector<CoverEdge> out;
    out.reserve(2 * g.edge_count());
    for (size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        for (const auto& pr : pairing_partition(g, rho, e)) {
            out.push_back({corner_index(g, ed.a, e, pr[0]), corner_index(g, ed.b, e, pr[1]), e});
        }
    }
    return out;
}

}  // namespace

CoverGraph cover_graph(const TrivalentGraph& g, const EdgePairing& rho) {
    validate(g);
    check_pairing(g, rho);
    CoverGraph cg;
    for (size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        cg.corners.push_back({v, inc[0], inc[1]});
        cg.corners.push_back({v, inc[0], inc[2]});
        cg.corners.push_back({v, inc[1], inc[2]});
    }
    cg.edges = cover_edges(g, rho);
    std::vector<std::vector<size_t>> at(cg.corners.size());
    for (size_t i = 0; i < cg.edges.size(); ++i) {
        at[cg.edges[i].from].push_back(i);
        at[cg.edges[i].to].push_back(i);
    }
    for (const auto& a : at) {
        if (a.size() != 2) throw MmError(ErrorCode::InternalError, "cover graph is not 2-regular");
    }
    std::vector<char> used(cg.edges.size(), 0);
    for (size_t start = 0; start < cg.edges.size(); ++start) {
        if (used[start]) continue;
        std::vector<size_t> cyc;
        size_t ce = start;
        size_t corner = cg.edges[start].from;
        while (!used[ce]) {
            used[ce] = 1;
            cyc.push_back(ce);
            corner = cg.edges[ce].from == corner ? cg.edges[ce].to : cg.edges[ce].from;
            ce = at[corner][0] == ce ? at[corner][1] : at[corner][0];
        }
        cg.cycles.push_back(std::move(cyc));
    }
    return cg;
}

uint64_t default_search_budget() {
    if (const char* env = std::getenv("MM_SEARCH_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw MmError(ErrorCode::InvalidArgument, std::string("MM_SEARCH_BUDGET is not an integer: ") + env);
        }
    }
    return uint64_t{1} << 24;
}

namespace {

class RollbackUnionFind {
public:
    explicit RollbackUnionFind(size_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    size_t find(size_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    /// Returns true when x and y were already joined (a cycle closes).
    bool unite(size_t x, size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
            history_.push_back(SIZE_MAX);
            return true;
        }
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        --components_;
        history_.push_back(y);
        return false;
    }
    void undo() {
        size_t y = history_.back();
        history_.pop_back();
        if (y == SIZE_MAX) return;
        size_t x = parent_[y];
        size_[x] -= size_[y];
        parent_[y] = y;
        ++components_;
    }
    size_t components() const { return components_; }

private:
    std::vector<size_t> parent_;
    std::vector<size_t> size_;
    std::vector<size_t> history_;
    size_t components_;
};

}  // namespace

FaceSearchResult face_double_cover(const TrivalentGraph& g, std::optional<uint64_t> budget) {
    validate(g);
    const size_t m = g.edge_count();
    const uint64_t limit = budget.value_or(default_search_budget());
    if (m >= 64 || (uint64_t{1} << m) > limit)
        throw MmError(ErrorCode::SearchBudgetExceeded,
                      "2^" + std::to_string(m) + " pairings exceed the search budget " + std::to_string(limit) +
                          "; supply the faces instead");
    const size_t target = static_cast<size_t>(g.genus()) + 1;

    // BFS edge order so that cycles close early
    std::vector<size_t> order;
    std::vector<char> seen_v(g.vertex_count(), 0), seen_e(m, 0);
    std::deque<size_t> queue{0};
    seen_v[0] = 1;
    while (!queue.empty()) {
        size_t v = queue.front();
        queue.pop_front();
        for (size_t id : g.incident(v)) {
            if (!seen_e[id]) {
                seen_e[id] = 1;
                order.push_back(id);
            }
            size_t w = g.other_end(id, v);
            if (!seen_v[w]) {
                seen_v[w] = 1;
                queue.push_back(w);
            }
        }
    }

    // the two cover edges for each (edge, bit)
    std::vector<std::array<std::array<std::pair<size_t, size_t>, 2>, 2>> choices(m);
    for (size_t e = 0; e < m; ++e) {
        for (uint8_t bit = 0; bit < 2; ++bit) {
            EdgePairing probe;
            probe.bits.assign(m, 0);
            probe.bits[e] = bit;
            auto parts = pairing_partition(g, probe, e);
            for (size_t k = 0; k < 2; ++k) {
                choices[e][bit][k] = {corner_index(g, g.edge(e).a, e, parts[k][0]),
                                      corner_index(g, g.edge(e).b, e, parts[k][1])};
            }
        }
    }

    RollbackUnionFind uf(3 * g.vertex_count());
    EdgePairing current;
    current.bits.assign(m, 0);
    FaceSearchResult result;
    size_t closed = 0;

    auto rec = [&](auto&& self, size_t depth) -> void {
        // every closed cycle is a component; each open component yields at most one more cycle
        if (uf.components() < target) return;
        if (depth == m) {
            if (closed == target) {
                if (result.solutions == 0) result.pairing = current;
                ++result.solutions;
            }
            return;
        }
        size_t e = order[depth];
        for (uint8_t bit = 0; bit < 2; ++bit) {
            current.bits[e] = bit;
            size_t added = 0;
            for (const auto& [x, y] : choices[e][bit]) {
                if (uf.unite(x, y)) ++added;
            }
            closed += added;
            self(self, depth + 1);
            closed -= added;
            uf.undo();
            uf.undo();
        }
        current.bits[e] = 0;
    };
    rec(rec, 0);
    if (result.solutions == 0)
        throw MmError(ErrorCode::NotPlanar, "no edge pairing has " + std::to_string(target) + " cover cycles");
    return result;
}

EdgePairing face_cover_from_faces(const TrivalentGraph& g, const std::vector<std::vector<size_t>>& faces) {
    validate(g);
    const size_t m = g.edge_count();
    const size_t target = static_cast<size_t>(g.genus()) + 1;
    if (faces.size() != target)
        throw MmError(ErrorCode::FacesNotDoubleCover,
                      std::to_string(faces.size()) + " faces given, expected " + std::to_string(target));
    std::vector<int> cover_count(m, 0);
    std::vector<int> bit(m, -1);
    for (const auto& face : faces) {
        const size_t k = face.size();
        if (k < 3) throw MmError(ErrorCode::FacesNotDoubleCover, "face with fewer than 3 vertices");
        std::vector<size_t> ids(k);
        for (size_t i = 0; i < k; ++i) {
            size_t u = face[i], v = face[(i + 1) % k];
            if (u >= g.vertex_count() || v >= g.vertex_count())
                throw MmError(ErrorCode::FacesNotDoubleCover, "face vertex out of range");
            auto id = g.edge_between(u, v);
            if (!id)
                throw MmError(ErrorCode::FacesNotDoubleCover,
                              "face step " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
            ids[i] = *id;
        }
        for (size_t i = 0; i < k; ++i) {
            size_t prev = ids[(i + k - 1) % k], e = ids[i], next = ids[(i + 1) % k];
            ++cover_count[e];
            // prev meets e at face[i], next meets e at face[i+1]
            size_t at_a = g.edge(e).a == face[i] ? prev : next;
            size_t at_b = g.edge(e).a == face[i] ? next : prev;
            int b = pairing_bit_for(g, e, at_a, at_b);
            if (bit[e] >= 0 && bit[e] != b)
                throw MmError(ErrorCode::FacesNotDoubleCover,
                              "faces through edge " + std::to_string(e) + " induce conflicting pairings");
            bit[e] = b;
        }
    }
    for (size_t e = 0; e < m; ++e) {
        if (cover_count[e] != 2)
            throw MmError(ErrorCode::FacesNotDoubleCover,
                          "edge " + std::to_string(e) + " is covered " + std::to_string(cover_count[e]) + " times");
    }
    EdgePairing rho;
    for (int b : bit) rho.bits.push_back(static_cast<uint8_t>(b));
    if (cover_graph(g, rho).cycle_count() != target)
        throw MmError(ErrorCode::FacesNotDoubleCover, "induced pairing does not have g+1 cover cycles");
    return rho;
}

Int pairing_count(const TrivalentGraph& g) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, g.edge_count());
    return r;
}

Orientability orientability(const TrivalentGraph& g, const EdgePairing& rho) {
    CoverGraph cg = cover_graph(g, rho);
    const size_t r = cg.cycle_count();
    // direction in which each cover edge is traversed by its cycle (+1: edge.a -> edge.b)
    std::vector<int> dir(cg.edges.size(), 0);
    std::vector<size_t> cycle_of(cg.edges.size(), 0);
    for (size_t c = 0; c < r; ++c) {
        const auto& cyc = cg.cycles[c];
        // corner shared by consecutive cover edges tells the traversal direction
        for (size_t i = 0; i < cyc.size(); ++i) {
            const CoverEdge& ce = cg.edges[cyc[i]];
            const CoverEdge& nx = cg.edges[cyc[(i + 1) % cyc.size()]];
            bool ends_at_to = (ce.to == nx.from || ce.to == nx.to);
            if (cyc.size() == 1) ends_at_to = true;
            dir[cyc[i]] = ends_at_to ? 1 : -1;
            cycle_of[cyc[i]] = c;
        }
    }
    // sigma[c1] * sigma[c2] = -dir1 * dir2 for the two cover edges over each base edge
    std::vector<std::vector<std::pair<size_t, int>>> adj(r);
    bool ok = true;
    for (size_t e = 0; e < g.edge_count(); ++e) {
        size_t i = 2 * e, j = 2 * e + 1;
        int rel = -dir[i] * dir[j];
        size_t c1 = cycle_of[i], c2 = cycle_of[j];
        if (c1 == c2) {
            if (rel != 1) ok = false;
            continue;
        }
        adj[c1].push_back({c2, rel});
        adj[c2].push_back({c1, rel});
    }
    std::vector<int> sigma(r, 0);
    for (size_t s = 0; s < r && ok; ++s) {
        if (sigma[s] != 0) continue;
        sigma[s] = 1;
        std::deque<size_t> queue{s};
        while (!queue.empty() && ok) {
            size_t c = queue.front();
            queue.pop_front();
            for (auto [d, rel] : adj[c]) {
                int want = sigma[c] * rel;
                if (sigma[d] == 0) {
                    sigma[d] = want;
                    queue.push_back(d);
                } else if (sigma[d] != want) {
                    ok = false;
                    break;
                }
            }
        }
    }
    Orientability o;
    o.a = ok ? 0 : 1;
    o.cycles = r;
    o.euler_characteristic = static_cast<int>(r) + 1 - g.genus();
    return o;
}

}  // namespace mmc
