#pragma once

#include "mmc/mpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace mmc {

/// Parses a polynomial over Q in the named variables. Grammar: sums of products with
/// explicit or implicit multiplication, "^" with non-negative integer exponents,
/// parentheses, integer and p/q coefficients, and division by constants.
/// Throws ParseError with a "line:column" location.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& names);

/// Canonical text: terms in descending graded lex order, e.g. "x0^2 - 3/2*x0*x1 + 2".
std::string render_poly(const MPoly& p, const std::vector<std::string>& names);
/// Macaulay2-friendly rendering (same grammar, rationals written as (p/q)).
std::string render_poly_m2(const MPoly& p, const std::vector<std::string>& names);

/// x0..x{n-1}.
std::vector<std::string> default_var_names(size_t n);

/// Text file of polynomials, one per logical line, with headers
///   vars: a b c      (required)
///   params: a1 a2    (optional)
///   eps: eps         (optional name of the deformation parameter, default "eps")
/// and "#" comments. A polynomial continues on the next line while parentheses are open
/// or the line ends with an operator.
struct PolyFile {
    std::vector<std::string> vars;
    std::vector<std::string> params;
    std::string eps = "eps";
    /// Polynomials in the ring vars + params + [eps], in that variable order.
    std::vector<MPoly> polys;
    std::vector<std::string> all_names() const;
};

PolyFile parse_poly_file(const std::string& text);
PolyFile load_poly_file(const std::string& path);

}  // namespace mmc
