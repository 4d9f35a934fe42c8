#pragma once

#include "mmc/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mmc {

struct Edge {
    size_t a = 0;
    size_t b = 0;
};

/// Simple trivalent graph; edge ids are positions in `edges`.
class TrivalentGraph {
public:
    TrivalentGraph() = default;
    TrivalentGraph(size_t vertex_count, std::vector<Edge> edges);

    size_t vertex_count() const { return vertex_count_; }
    size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(size_t id) const { return edges_.at(id); }
    /// Incident edge ids at v, ascending.
    const std::vector<size_t>& incident(size_t v) const { return incident_.at(v); }
    size_t other_end(size_t edge_id, size_t v) const;
    /// Edge joining u and v, if any.
    std::optional<size_t> edge_between(size_t u, size_t v) const;
    /// E - V + 1.
    int genus() const;
    bool operator==(const TrivalentGraph& o) const;

private:
    size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<size_t>> incident_;
};

/// Checks simplicity, degree 3, connectivity, 3-connectivity and g >= 3; returns the genus.
int validate(const TrivalentGraph& g);

struct OrientedCycle {
    /// (edge id, +1 when traversed from edge.a to edge.b, -1 otherwise), in traversal order.
    std::vector<std::pair<size_t, int>> steps;
};

struct OrientedCycleBasis {
    std::vector<OrientedCycle> cycles;
    /// cycles.size() x edge_count signed incidence matrix, stored by cycle.
    std::vector<std::vector<int>> incidence;
};

/// One fundamental cycle per non-tree edge of the BFS tree from vertex 0 (neighbors in edge-id order).
OrientedCycleBasis cycle_basis(const TrivalentGraph& g);

/// One bit per edge. For e = (a, b) with the other edges a1 < a2 at a and b1 < b2 at b:
/// bit 0 pairs {a1,b1},{a2,b2}; bit 1 pairs {a1,b2},{a2,b1}.
struct EdgePairing {
    std::vector<uint8_t> bits;
    bool operator==(const EdgePairing& o) const = default;
};

/// The two pairs of rho(e); in each pair the first edge meets edge.a and the second meets edge.b.
std::array<std::array<size_t, 2>, 2> pairing_partition(const TrivalentGraph& g, const EdgePairing& rho, size_t e);
/// Bit encoding the pairing that puts x (at edge.a) together with y (at edge.b).
uint8_t pairing_bit_for(const TrivalentGraph& g, size_t e, size_t x, size_t y);
/// Pairing whose bits are the binary digits of `index` (edge 0 is the lowest bit).
EdgePairing pairing_from_index(const TrivalentGraph& g, uint64_t index);

struct Corner {
    size_t vertex;
    size_t e1;  // e1 < e2, both incident to vertex
    size_t e2;
};

struct CoverEdge {
    size_t from;  // corner at edge.a
    size_t to;    // corner at edge.b
    size_t base_edge;
};

struct CoverGraph {
    std::vector<Corner> corners;
    std::vector<CoverEdge> edges;
    /// Each cycle as a sequence of cover-edge indices in traversal order.
    std::vector<std::vector<size_t>> cycles;
    size_t cycle_count() const { return cycles.size(); }
};

/// Corner index of {e, f} at vertex v in the canonical corner list (3 per vertex).
size_t corner_index(const TrivalentGraph& g, size_t v, size_t e, size_t f);
CoverGraph cover_graph(const TrivalentGraph& g, const EdgePairing& rho);

/// Search budget used by face_double_cover; MM_SEARCH_BUDGET overrides the default 2^24.
uint64_t default_search_budget();

struct FaceSearchResult {
    EdgePairing pairing;
    /// Number of pairings reaching g+1 cycles (1 for planar graphs).
    size_t solutions = 0;
};

/// Finds the pairing with g+1 cover cycles by pruned exhaustive search.
/// Throws NotPlanar when none exists, SearchBudgetExceeded when 2^E > budget.
FaceSearchResult face_double_cover(const TrivalentGraph& g, std::optional<uint64_t> budget = std::nullopt);

/// Pairing induced by a list of faces given as vertex cycles. Throws FacesNotDoubleCover.
EdgePairing face_cover_from_faces(const TrivalentGraph& g, const std::vector<std::vector<size_t>>& faces);

/// 2^(edge count).
Int pairing_count(const TrivalentGraph& g);

struct Orientability {
    int a = 0;  // 0 orientable, 1 not
    int euler_characteristic = 0;
    size_t cycles = 0;
};

Orientability orientability(const TrivalentGraph& g, const EdgePairing& rho);

}  // namespace mmc
