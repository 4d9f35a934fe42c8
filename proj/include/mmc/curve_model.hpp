#pragma once

#include "mmc/graph.hpp"
#include "mmc/mpoly.hpp"
#include "mmc/qmatrix.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace mmc {

/// Degree-d piece of the curve ideal: RREF basis with pivots at leading monomials.
struct IdealPiece {
    int degree = 0;
    std::shared_ptr<const MonomialBasis> basis;
    QMatrix rref;
    std::vector<size_t> pivots;
    /// Non-pivot monomial indices; they form a basis of (S/I)_d.
    std::vector<size_t> standard;
    size_t dim() const { return pivots.size(); }
    size_t quotient_dim() const { return standard.size(); }
};

struct LineSpan {
    RatVec p;
    RatVec q;
};

class GraphCurveModel {
public:
    TrivalentGraph graph;
    int genus = 0;
    /// P_e per edge.
    std::vector<RatVec> nodes;
    /// Line of each vertex, spanned by two of its nodes.
    std::vector<LineSpan> lines;
    /// Minimal generators (interpolated ones ascend in degree; adopted ones keep their order).
    std::vector<MPoly> generators;
    std::vector<std::string> var_names;
    /// Pairing used to label companion edges; the face pairing when the graph is planar.
    EdgePairing pairing;
    bool pairing_is_planar = false;
    /// Highest generator degree searched during interpolation.
    int interpolation_degree = 0;

    size_t nvars() const { return static_cast<size_t>(genus); }
    /// d+1 distinct points on the line of vertex v.
    std::vector<RatVec> line_points(size_t v, int count) const;
    const IdealPiece& ideal_piece(int d) const;
    /// Coordinates of p modulo I on the standard monomials of degree d (p homogeneous of degree d).
    RatVec nf_coords(const MPoly& p, int d) const;
    MPoly normal_form(const MPoly& p, int d) const;
    MPoly from_nf_coords(const RatVec& c, int d) const;
    bool in_ideal(const MPoly& p) const;
    int max_generator_degree() const;
    int min_generator_degree() const;

private:
    struct Cache {
        std::mutex mu;
        std::map<int, std::shared_ptr<IdealPiece>> pieces;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Node vectors from signed cycle incidences, lines, planar pairing (if any) and interpolated ideal.
GraphCurveModel build_model(const TrivalentGraph& g,
                            const std::optional<std::vector<std::vector<size_t>>>& faces = std::nullopt);

/// A line given either by g-2 linear forms (its prime) or by two spanning points.
struct LineInput {
    std::vector<RatVec> prime;
    std::vector<RatVec> points;
};

/// Recovers the graph from the intersection pattern of the lines (vertex i = line i, edges in
/// lexicographic order of the line pairs, or in the order of `expected` when given).
GraphCurveModel ingest_model(const std::vector<LineInput>& lines, size_t nvars,
                             const std::optional<TrivalentGraph>& expected = std::nullopt,
                             const std::optional<std::vector<std::vector<size_t>>>& faces = std::nullopt);

/// Rebuilds a model from stored nodes, generators and pairing (lines from the nodes), re-running
/// the model and generator checks.
GraphCurveModel restore_model(const TrivalentGraph& g, const std::vector<RatVec>& nodes, const std::vector<MPoly>& generators,
                              const std::vector<std::string>& var_names, const EdgePairing& pairing, bool planar);

/// Minimal generators of I by interpolation, with the generation check. Also stored in the model.
std::vector<MPoly> interpolate_ideal(GraphCurveModel& m);

/// Replaces the generators by `gens` after checking that they lie in I and minimally generate it.
void set_generators(GraphCurveModel& m, const std::vector<MPoly>& gens);

/// Verifies the model invariants; throws DegenerateConfiguration.
void check_model(const GraphCurveModel& m);

struct EdgeLocalData {
    size_t edge = 0;
    size_t v1 = 0;  // edge.a, carries L1
    size_t v2 = 0;  // edge.b, carries L2
    size_t e1 = 0, e1p = 0, e2 = 0, e2p = 0;  // {e1,e2} is a pair of the model pairing
    RatVec P, P1, P1p, P2, P2p;               // P = P1 + P1p = P2 + P2p
    MPoly l1, l2;
    std::vector<MPoly> q;
    std::vector<MPoly> f_factors;
    MPoly f;
    MPoly F;
};

/// Local data at edge e. With `negate`, every representative is replaced by its negative.
EdgeLocalData edge_local_data(const GraphCurveModel& m, size_t e, bool negate = false);

/// Linear form vanishing at `zeros` with value 1 at `one`; nullopt when impossible.
std::optional<RatVec> linear_form_through(const std::vector<RatVec>& zeros, const RatVec& one);

/// True when u and v represent the same projective point.
bool projectively_equal(const RatVec& u, const RatVec& v);
/// Primitive integer representative whose first nonzero entry is positive.
RatVec primitive_representative(const RatVec& v);

}  // namespace mmc
