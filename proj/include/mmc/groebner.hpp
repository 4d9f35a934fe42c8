#pragma once

#include "mmc/mpoly.hpp"

#include <optional>
#include <vector>

namespace mmc {

/// Leading monomial in lex order (x0 > x1 > ...).
Monomial lex_leading_monomial(const MPoly& p);

/// Full reduction of p by g in lex order.
MPoly lex_reduce(const MPoly& p, const std::vector<MPoly>& g);

/// Reduced lex Groebner basis (monic, sorted by leading monomial descending). Plain Buchberger
/// with the coprime criterion; intended for a handful of variables and low degrees.
std::vector<MPoly> groebner_lex(const std::vector<MPoly>& gens, size_t max_pairs = 200000);

/// Zero-dimensional ideal in shape position: x_i = r_i(t) for i < n-1 and p(t) = 0, t = x_{n-1}.
struct ShapeBasis {
    UniPoly p;
    std::vector<UniPoly> r;
};

/// Reads a reduced lex basis as a shape basis; nullopt when it is not of that form.
std::optional<ShapeBasis> shape_basis(const std::vector<MPoly>& gb);

}  // namespace mmc
