#pragma once

#include "mmc/unipoly.hpp"

#include <climits>
#include <string>

namespace mmc {

/// Element of Q(eps), ordered with 0 < eps < every positive rational.
/// Stored as num/den with gcd removed and den monic.
class EpsScalar {
public:
    EpsScalar() : num_(), den_(UniPoly::constant(1)) {}
    EpsScalar(const Rat& c);  // NOLINT(google-explicit-constructor)
    EpsScalar(UniPoly num, UniPoly den);
    static EpsScalar eps();

    const UniPoly& numerator() const { return num_; }
    const UniPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    EpsScalar operator-() const;
    EpsScalar& operator+=(const EpsScalar& o);
    EpsScalar& operator-=(const EpsScalar& o);
    EpsScalar& operator*=(const EpsScalar& o);
    EpsScalar& operator/=(const EpsScalar& o);
    friend EpsScalar operator+(EpsScalar a, const EpsScalar& b) { return a += b; }
    friend EpsScalar operator-(EpsScalar a, const EpsScalar& b) { return a -= b; }
    friend EpsScalar operator*(EpsScalar a, const EpsScalar& b) { return a *= b; }
    friend EpsScalar operator/(EpsScalar a, const EpsScalar& b) { return a /= b; }
    bool operator==(const EpsScalar& o) const = default;

    /// Value at a rational eps (den must not vanish there).
    Rat eval(const Rat& e) const;
    std::string to_string() const;

private:
    void normalize();
    UniPoly num_;
    UniPoly den_;
};

/// Marker returned by eps_val for zero.
inline constexpr int kValuationInfinity = INT_MAX;

/// eps-adic valuation ord(num) - ord(den); kValuationInfinity for zero.
int eps_val(const EpsScalar& x);
/// Sign in the ordered field Q(eps): sign of the lowest-order coefficient ratio.
int eps_sign(const EpsScalar& x);
/// Coefficient of eps^val(x) in the Laurent expansion of x.
Rat eps_leading_coefficient(const EpsScalar& x);

inline bool operator<(const EpsScalar& a, const EpsScalar& b) { return eps_sign(b - a) > 0; }

}  // namespace mmc
