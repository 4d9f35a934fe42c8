#pragma once

#include "mmc/curve_model.hpp"
#include "mmc/unipoly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mmc {

/// Coordinates of Hom(I, S/I)_0: for each generator, its image's normal-form coordinates.
struct TangentLayout {
    std::vector<int> degrees;
    std::vector<size_t> offsets;
    size_t total = 0;
};

TangentLayout tangent_layout(const GraphCurveModel& m);

/// Images of the generators, in normal form.
struct TangentVector {
    std::vector<MPoly> images;
    bool operator==(const TangentVector& o) const = default;
};

RatVec tangent_coords(const GraphCurveModel& m, const TangentVector& t);
TangentVector tangent_from_coords(const GraphCurveModel& m, const RatVec& c);
/// Reduces arbitrary generator images modulo I.
TangentVector reduce_tangent(const GraphCurveModel& m, const std::vector<MPoly>& images);

struct HomSpace {
    std::vector<RatVec> basis;  // in tangent coordinates
    size_t dim() const { return basis.size(); }
};

/// Degree-0 homomorphisms I -> S/I, from syzygies up to degree maxGenDeg+1.
/// Throws HomDimensionMismatch unless the dimension is g^2+3g-4.
HomSpace hom_space(const GraphCurveModel& m);

/// True when the images respect every syzygy up to degree maxGenDeg+1.
bool is_homomorphism(const GraphCurveModel& m, const RatVec& coords);

/// x_i d/dx_j applied to the generators, for all (i,j) except (g-1,g-1), row-major in (i,j).
std::vector<TangentVector> pgl_basis(const GraphCurveModel& m);
/// Images of sum_i x_i d/dx_i (must reduce to zero).
TangentVector euler_vector(const GraphCurveModel& m);

/// Linear functional eta -> eta(F_e)(P_e) in tangent coordinates, with F_e from edge_local_data.
RatVec node_functional(const GraphCurveModel& m, const EdgeLocalData& d);

/// First-order smoothing of the node at e through the conic l1*l2 + t*l1'*l2' (unnormalized).
TangentVector eta_edge(const GraphCurveModel& m, size_t e);
/// Same direction from the Hom basis: kills every other node functional, outside the PGL span.
TangentVector eta_edge_method2(const GraphCurveModel& m, size_t e, const HomSpace& hom,
                               const std::vector<RatVec>& functionals);

struct SignData {
    /// Isolating interval of t0 over both rays; empty when neither ray meets another line.
    std::optional<RootInterval> t0;
    Rat t_star;   // rational point in (0, t0) where the sign is taken
    int s = 0;    // sign of F on the open segment along ray 1
    /// t0 is a root on ray 1, so F vanishes at t0 itself there.
    bool attained_on_ray1 = false;
};

SignData sign_data(const EdgeLocalData& d);

/// Scales eta so that value(eta) = -s. Throws ZeroPairing when value(eta) = 0.
TangentVector normalize_eta(const GraphCurveModel& m, const TangentVector& eta, const RatVec& functional, int s);

struct AdaptedBasis {
    TangentLayout layout;
    std::vector<TangentVector> pgl;
    std::vector<TangentVector> eta;        // per edge, normalized
    std::vector<RatVec> functionals;       // eta -> eta(F_e)(P_e) per edge
    std::vector<SignData> signs;
    std::vector<EdgeLocalData> local;
    size_t hom_dim = 0;
    /// Oriented edge coordinate: -s(e) * eta(F_e)(P_e), scaled so that eta_e gives 1.
    Rat edge_coordinate(const GraphCurveModel& m, size_t e, const TangentVector& t) const;
};

AdaptedBasis adapted_basis(const GraphCurveModel& m);

struct Decomposition {
    RatVec pgl;     // g^2-1 coefficients
    RatVec lambda;  // per edge
};

/// Exact coefficients of t in the adapted basis. Throws NotInSpan.
Decomposition decompose(const GraphCurveModel& m, const AdaptedBasis& b, const TangentVector& t);

struct ReferenceMatch {
    /// t_ref = ratio * eta_e modulo the PGL span; nullopt when not proportional.
    std::vector<std::optional<Rat>> ratio;
};

/// Compares reference edge vectors with the basis; when every ratio is positive the basis edge
/// vectors are replaced by the references.
ReferenceMatch adopt_reference_edges(const GraphCurveModel& m, AdaptedBasis& b,
                                     const std::vector<std::optional<TangentVector>>& refs);

/// Polynomial in x with coefficients in Q[eps]: coeffs[k] multiplies eps^k.
struct EpsPoly {
    std::vector<MPoly> coeffs;
};

/// Splits a polynomial in (vars..., eps) (eps the last variable) by powers of eps.
EpsPoly split_eps(const MPoly& p, size_t nvars);

/// Tangent vector of the flat limit of the family at eps = 0. Throws NoFirstOrderLift.
TangentVector family_tangent(const GraphCurveModel& m, const std::vector<EpsPoly>& family, int max_shift = 4);

/// Family whose polynomials live in (vars..., params..., eps) with linear parameter dependence.
struct ParamFamily {
    size_t nvars = 0;
    size_t nparams = 0;
    std::vector<MPoly> polys;
};

std::vector<EpsPoly> specialize_family(const ParamFamily& fam, const RatVec& theta);

/// Per edge, the affine form theta -> edge_coordinate(eta(theta)): entry 0 is the constant term,
/// entry 1+p the coefficient of parameter p.
std::vector<RatVec> hyperplanes_on_family(const GraphCurveModel& m, const AdaptedBasis& b, const ParamFamily& fam);

}  // namespace mmc
