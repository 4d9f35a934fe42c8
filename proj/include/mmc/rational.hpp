#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mmc {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// Parses "p", "-p" or "p/q"; the result is canonicalized. Throws MmError(ParseError).
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

Rat dot(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& v, const Rat& s);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

/// Least common multiple of the denominators of a vector.
Int denominator_lcm(const RatVec& v);

}  // namespace mmc
