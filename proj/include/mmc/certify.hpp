#pragma once

#include "mmc/tangent.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mmc {

/// Generators base[i] + eps * first_order[i].
struct DeformedIdeal {
    std::vector<MPoly> base;
    std::vector<MPoly> first_order;
    /// Generators with eps set to a rational value.
    std::vector<MPoly> at(const Rat& eps) const;
};

struct MMCertificate {
    size_t genus = 0;
    EdgePairing pairing;
    size_t cover_cycles = 0;
    RatVec lambda;
};

struct MMDeformation {
    DeformedIdeal ideal;
    MMCertificate certificate;
    TangentVector tangent;
};

/// f + eps * sum_e lambda_e eta_e(f) for every generator f. Throws NonPositiveCoefficient unless
/// every lambda_e > 0, NotPlanar when the model pairing is not a face cover with g+1 cycles.
MMDeformation mm_deformation(const GraphCurveModel& m, const AdaptedBasis& b, const RatVec& lambda);

enum class ConeStatus { InCone, OnBoundary, Outside };
const char* cone_status_name(ConeStatus s);

struct ConeCheck {
    ConeStatus status = ConeStatus::InCone;
    /// Edges with lambda_e = 0 (OnBoundary) or lambda_e < 0 (Outside).
    std::vector<size_t> edges;
    Decomposition decomposition;
};

ConeCheck mm_cone_check(const GraphCurveModel& m, const AdaptedBasis& b, const TangentVector& t);

struct SmoothnessReport {
    size_t points = 0;    // sampled points (counted over C)
    size_t singular = 0;  // sampled points where the Jacobian rank drops
    std::vector<std::string> notes;
    bool ok() const { return points > 0 && singular == 0; }
};

/// Jacobian rank n-2 at each rational point of the curve cut out by homogeneous `gens` in P^{n-1}.
SmoothnessReport spot_smoothness(const std::vector<MPoly>& gens, const std::vector<RatVec>& points);

/// Samples points by intersecting with random hyperplanes in random affine charts, solving each
/// slice through a lex Groebner basis in shape position, and checking the Jacobian rank at every
/// root exactly. Only a spot check, not a global smoothness proof.
SmoothnessReport spot_smoothness_sliced(const std::vector<MPoly>& gens, int slices, uint32_t seed = 1);

/// Resultant of the three partials of a plane quartic family sum_k eps^k F_k, as a polynomial in eps.
/// Throws DegenerateFamily when the input is not a ternary quartic family or the result is zero.
UniPoly quartic_family_discriminant(const EpsPoly& family);

/// Genus-four family {Q = 0, C = 0} in P^3 (variables x, y, z, w) with Q = a w^2 + B w + Q0, a a
/// nonzero constant, and C a cubic free of w. The curve is a double cover of the plane cubic C
/// branched along the conic B^2 - 4 a Q0, so it is singular exactly where C is singular or touches
/// the conic. Returns the product of both loci as a polynomial in eps, up to a constant factor.
/// Throws DegenerateFamily when the input does not have this shape.
UniPoly double_cover_discriminant(const EpsPoly& quadric, const EpsPoly& cubic);

}  // namespace mmc
