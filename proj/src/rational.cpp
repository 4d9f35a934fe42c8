#include "mmc/rational.hpp"

#include "mmc/error.hpp"

#include <cctype>

namespace mmc {

Rat parse_rat(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return MmError(ErrorCode::ParseError, "not a rational number: '" + s + "'"); };
    if (s.empty()) throw bad();
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else if (c == '/' && !seen_slash) {
            seen_slash = true;
        } else {
            throw bad();
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw bad();
    if (s[0] == '+') s.erase(0, 1);
    Rat r;
    if (r.set_str(s, 10) != 0) throw bad();
    if (r.get_den() == 0) throw bad();
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw MmError(ErrorCode::DimensionMismatch, "dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    }
    return s;
}

RatVec scaled(const RatVec& v, const Rat& s) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

RatVec add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw MmError(ErrorCode::DimensionMismatch, "add: length mismatch");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw MmError(ErrorCode::DimensionMismatch, "sub: length mismatch");
    RatVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool is_zero(const RatVec& v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

Int denominator_lcm(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) {
        if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    return l;
}

}  // namespace mmc
