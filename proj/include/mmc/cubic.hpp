#pragma once

#include "mmc/eps_scalar.hpp"
#include "mmc/mpoly.hpp"

#include <array>
#include <string>

namespace mmc {

/// c1 x^3 + c2 x^2y + c3 x^2z + c4 xy^2 + c5 xyz + c6 xz^2 + c7 y^3 + c8 y^2z + c9 yz^2 + c10 z^3.
struct TernaryCubic {
    std::array<EpsScalar, 10> c;
};

using RationalCubic = std::array<Rat, 10>;

/// Cubic from a polynomial in (x, y, z) or (x, y, z, eps); coefficients may depend on eps.
TernaryCubic cubic_from_poly(const MPoly& p);
RationalCubic cubic_at(const TernaryCubic& c, const Rat& eps);
MPoly cubic_poly(const RationalCubic& c);

/// Discriminant, degree 12 in the coefficients; the c1^4 c7^4 c10^4 coefficient is -19683.
Rat cubic_discriminant(const RationalCubic& c);
/// Aronhold invariant, degree 4 in the coefficients, c5^4 coefficient 1.
Rat aronhold(const RationalCubic& c);
/// The Aronhold invariant as a polynomial in c1..c10.
const MPoly& aronhold_polynomial();

struct CubicInvariants {
    EpsScalar discriminant;
    EpsScalar aronhold;
    EpsScalar j;  // zero when the discriminant vanishes (see has_j)
    bool has_j = false;
};

/// Discriminant, Aronhold invariant and j = A^3 / Delta over Q(eps).
CubicInvariants cubic_invariants(const TernaryCubic& c);
/// Throws ZeroDiscriminant when Delta = 0.
EpsScalar j_invariant(const TernaryCubic& c);

enum class Genus1Verdict { MM, NotMaximal, NotMumford, NotBoth };
const char* verdict_name(Genus1Verdict v);

struct Genus1Result {
    Genus1Verdict verdict;
    int discriminant_sign = 0;
    int j_valuation = 0;
    CubicInvariants invariants;
};

/// MM exactly when Delta > 0 and val(j) < 0. Throws SingularCubic when Delta = 0.
Genus1Result genus1_mm_test(const TernaryCubic& c);

}  // namespace mmc
