#pragma once

#include "mmc/mpoly.hpp"

#include <optional>
#include <vector>

namespace mmc {

/// Macaulay resultant of n homogeneous polynomials in n variables, as det(M)/det(M') with M the
/// degree sum(d_i - 1) + 1 Macaulay matrix and M' its non-reduced minor. Normalized so that
/// Res(x_0^{d_0}, ..., x_{n-1}^{d_{n-1}}) = 1. nullopt when det(M') = 0 for this input.
std::optional<Rat> macaulay_resultant(const std::vector<MPoly>& fs);

/// Resultant after a unimodular change of coordinates when the plain Macaulay quotient is
/// degenerate. The value is unchanged by such a change. Throws InternalError if all attempts fail.
Rat resultant(const std::vector<MPoly>& fs);

}  // namespace mmc
