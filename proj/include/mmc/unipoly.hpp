#pragma once

#include "mmc/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mmc {

/// Univariate polynomial over Q; coefficients in ascending degree, no trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(RatVec coefficients);
    static UniPoly constant(const Rat& c);
    static UniPoly monomial(const Rat& c, size_t degree);
    /// The polynomial t.
    static UniPoly identity();

    const RatVec& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rat coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    const Rat& leading() const { return coeffs_.back(); }
    /// Order of vanishing at 0; -1 for the zero polynomial.
    int order() const;
    Rat lowest_coefficient() const;

    Rat eval(const Rat& t) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly compose(const UniPoly& inner) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rat& s);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
    bool operator==(const UniPoly& o) const = default;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    RatVec coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

/// Sturm sequence of a nonzero polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
/// Number of distinct real roots in the half-open interval (a, b], a < b.
int count_roots(const std::vector<UniPoly>& sturm, const Rat& a, const Rat& b);
int count_roots(const UniPoly& p, const Rat& a, const Rat& b);
/// Cauchy bound: every real root has absolute value < bound.
Rat cauchy_bound(const UniPoly& p);

struct RootInterval {
    Rat lo;
    Rat hi;
};

/// Isolates the smallest strictly positive real root of p: the result satisfies
/// 0 < lo < root <= hi, no root of p lies in (0, lo], and (lo, hi] holds exactly
/// one distinct root. The interval is refined until hi - lo <= width (when given).
/// nullopt when p has no positive real root. p must be nonzero.
std::optional<RootInterval> isolate_min_positive_root(const UniPoly& p,
                                                      const std::optional<Rat>& width = std::nullopt);

/// Shrinks an isolating interval of a squarefree polynomial by bisection.
RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rat& width);

/// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
UniPoly interpolate(const RatVec& xs, const RatVec& ys);

}  // namespace mmc
