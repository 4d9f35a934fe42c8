#pragma once

#include "mmc/qmatrix.hpp"
#include "mmc/rational.hpp"
#include "mmc/unipoly.hpp"

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace mmc {

using Monomial = std::vector<int>;

inline int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

/// Graded lexicographic order, larger first (x0 > x1 > ...).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = monomial_degree(a);
        int db = monomial_degree(b);
        if (da != db) return da > db;
        return a > b;
    }
};

/// Sparse polynomial over Q in a fixed number of variables.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexGreater>;

    explicit MPoly(size_t nvars = 0) : nvars_(nvars) {}
    static MPoly constant(size_t nvars, const Rat& c);
    static MPoly variable(size_t nvars, size_t index);
    static MPoly term(const Monomial& m, const Rat& c);
    /// Sum of coeffs[i] * x_i.
    static MPoly linear_form(const RatVec& coeffs);

    size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    Rat coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rat& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
    friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    MPoly pow(unsigned k) const;
    Rat eval(const RatVec& point) const;
    MPoly derivative(size_t var) const;
    MPoly homogeneous_part(int d) const;

    /// p(change * x): variable x_i becomes sum_j change(i,j) x_j.
    MPoly substitute_linear(const QMatrix& change) const;
    /// Replace each variable x_i by images[i] (all in a common ring).
    MPoly substitute(const std::vector<MPoly>& images) const;
    /// t -> p(base + t*dir).
    UniPoly restrict_to_line(const RatVec& base, const RatVec& dir) const;
    /// Re-embed into a ring with more or fewer variables; `map[i]` is the new index of x_i.
    MPoly remap(size_t new_nvars, const std::vector<size_t>& map) const;

    /// Leading term in grlex.
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rat& leading_coefficient() const { return terms_.begin()->second; }

private:
    size_t nvars_;
    TermMap terms_;
};

/// poly_eval with dimension check.
Rat poly_eval(const MPoly& p, const RatVec& point);
/// poly_substitute_linear; throws SingularMatrix when `change` is not invertible.
MPoly poly_substitute_linear(const MPoly& p, const QMatrix& change);

/// All monomials of degree d in n variables, in descending grlex order, with index lookup.
class MonomialBasis {
public:
    MonomialBasis(size_t nvars, int degree);
    static std::shared_ptr<const MonomialBasis> get(size_t nvars, int degree);

    size_t size() const { return monomials_.size(); }
    size_t nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const Monomial& operator[](size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    size_t index(const Monomial& m) const;

    /// Coefficient vector of a homogeneous polynomial of this degree (zero polynomial allowed).
    RatVec coords(const MPoly& p) const;
    MPoly from_coords(const RatVec& v) const;
    /// Row of monomial values at a point.
    RatVec evaluation_row(const RatVec& point) const;

private:
    size_t nvars_;
    int degree_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, size_t> index_;
};

/// Binomial coefficient as size_t.
size_t binomial(size_t n, size_t k);

}  // namespace mmc
