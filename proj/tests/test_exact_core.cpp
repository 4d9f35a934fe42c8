#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mmc/eps_scalar.hpp"
#include "mmc/error.hpp"
#include "mmc/mpoly.hpp"
#include "mmc/qmatrix.hpp"
#include "mmc/unipoly.hpp"

#include <random>

using namespace mmc;

namespace {

QMatrix random_matrix(std::mt19937& rng, size_t r, size_t c, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> d(lo, hi);
    QMatrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

MPoly random_poly(std::mt19937& rng, size_t n, int deg, int terms) {
    std::uniform_int_distribution<int> coef(-7, 7);
    std::uniform_int_distribution<int> expo(0, deg);
    MPoly p(n);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n, 0);
        int rem = deg;
        for (size_t i = 0; i + 1 < n; ++i) {
            int e = std::uniform_int_distribution<int>(0, rem)(rng);
            m[i] = e;
            rem -= e;
        }
        m[n - 1] = rem;
        p.add_term(m, coef(rng));
    }
    (void)expo;
    return p;
}

// Numeric value of an EpsScalar at a tiny eps, for sign cross-checks.
double eval_double(const EpsScalar& x, double e) {
    auto ev = [e](const UniPoly& p) {
        double s = 0;
        for (int i = p.degree(); i >= 0; --i) s = s * e + p.coeff(static_cast<size_t>(i)).get_d();
        return s;
    };
    return ev(x.numerator()) / ev(x.denominator());
}

}  // namespace

TEST_CASE("rationals parse and stay reduced") {
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK(parse_rat("+4/2") == Rat(2));
    CHECK_THROWS_AS(parse_rat("2/-1"), MmError);
    CHECK_THROWS_AS(parse_rat("1/0"), MmError);
    CHECK_THROWS_AS(parse_rat("abc"), MmError);
    CHECK(to_string(Rat(-3, 6)) == "-1/2");
}

TEST_CASE("kernel basics") {
    CHECK(mat_kernel(QMatrix::identity(2)).empty());
    QMatrix m = QMatrix::from_rows({{1, 1}}, 2);
    auto k = mat_kernel(m);
    REQUIRE(k.size() == 1);
    CHECK(m.apply(k[0]) == RatVec{0});
    CHECK(k[0][0] == -k[0][1]);
}

TEST_CASE("kernel of random 5x8 matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix m = random_matrix(rng, 5, 8);
        auto k = mat_kernel(m);
        CHECK(k.size() + mat_rank(m) == 8);
        for (const auto& v : k) CHECK(is_zero(m.apply(v)));
        CHECK(vectors_rank(k, 8) == k.size());
    }
}

TEST_CASE("solve") {
    RatVec b{3, -4};
    CHECK(*mat_solve(QMatrix::identity(2), b) == b);
    QMatrix m = QMatrix::from_rows({{1, 2}, {2, 4}}, 2);
    CHECK_FALSE(mat_solve(m, {1, 3}).has_value());
    auto x = mat_solve(m, {1, 2});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == RatVec{1, 2});
}

TEST_CASE("determinant and inverse agree with cofactor oracle") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix m = random_matrix(rng, 3, 3);
        Rat cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                  m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                  m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(mat_det(m) == cof);
        auto inv = mat_inverse(m);
        CHECK(inv.has_value() == (sgn(cof) != 0));
        if (inv) CHECK(m * *inv == QMatrix::identity(3));
    }
    QMatrix frac = QMatrix::from_rows({{Rat(1, 2), Rat(1, 3)}, {Rat(1, 4), Rat(1, 5)}}, 2);
    CHECK(mat_det(frac) == Rat(1, 10) - Rat(1, 12));
}

TEST_CASE("poly_eval") {
    MPoly x = MPoly::variable(3, 0), y = MPoly::variable(3, 1), z = MPoly::variable(3, 2);
    CHECK(poly_eval(x * y, {2, 3, 0}) == 6);
    CHECK(poly_eval(x + y + z, {1, -1, 0}) == 0);
    MPoly fermat = x.pow(4) + y.pow(4) + z.pow(4);
    CHECK(poly_eval(fermat, {1, 0, 0}) == 1);
    CHECK_THROWS_AS(poly_eval(x, {1, 2}), MmError);
}

TEST_CASE("substitute_linear") {
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    CHECK(poly_substitute_linear(x, QMatrix::identity(2)) == x);
    QMatrix swap = QMatrix::from_rows({{0, 1}, {1, 0}}, 2);
    CHECK(poly_substitute_linear(x * y, swap) == x * y);
    CHECK_THROWS_AS(poly_substitute_linear(x, QMatrix::from_rows({{1, 1}, {1, 1}}, 2)), MmError);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        MPoly p = random_poly(rng, 3, 3, 6);
        MPoly q = random_poly(rng, 3, 2, 4);
        QMatrix a = random_matrix(rng, 3, 3);
        if (sgn(mat_det(a)) == 0) continue;
        MPoly pa = poly_substitute_linear(p, a);
        CHECK(pa.degree() == p.degree());
        CHECK(poly_substitute_linear(pa, *mat_inverse(a)) == p);
        CHECK(poly_substitute_linear(p * q, a) == pa * poly_substitute_linear(q, a));
        CHECK(poly_substitute_linear(p * q + q, a) ==
              pa * poly_substitute_linear(q, a) + poly_substitute_linear(q, a));
    }
}

TEST_CASE("monomial basis coordinates round trip") {
    auto b = MonomialBasis::get(4, 3);
    CHECK(b->size() == 20);
    CHECK((*b)[0] == Monomial{3, 0, 0, 0});
    CHECK((*b)[b->size() - 1] == Monomial{0, 0, 0, 3});
    std::mt19937 rng(9);
    MPoly p = random_poly(rng, 4, 3, 7);
    CHECK(b->from_coords(b->coords(p)) == p);
}

TEST_CASE("restrict_to_line") {
    MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
    UniPoly r = (x * y).restrict_to_line({1, 2}, {1, -1});  // (1+t)(2-t) = 2 + t - t^2
    CHECK(r == UniPoly(RatVec{2, 1, -1}));
}

TEST_CASE("isolate_min_positive_root") {
    UniPoly t = UniPoly::identity();
    auto one = UniPoly::constant(1);
    auto iv = isolate_min_positive_root(t - one);
    REQUIRE(iv);
    CHECK(iv->lo > 0);
    CHECK(iv->lo < 1);
    CHECK(iv->hi >= 1);

    auto p2 = (t - one) * (t - UniPoly::constant(3));
    iv = isolate_min_positive_root(p2);
    REQUIRE(iv);
    CHECK(iv->lo < 1);
    CHECK(iv->hi >= 1);
    CHECK(iv->hi < 3);

    auto sq2 = t * t - UniPoly::constant(2);
    iv = isolate_min_positive_root(sq2, Rat(1, 1 << 20));
    REQUIRE(iv);
    // sign-change oracle
    CHECK(sgn(sq2.eval(iv->lo)) * sgn(sq2.eval(iv->hi)) < 0);
    CHECK(iv->hi - iv->lo <= Rat(1, 1 << 20));
    CHECK(count_roots(sq2, 0, iv->lo) == 0);

    // double root and root at zero
    auto half = t - UniPoly::constant(Rat(1, 2));
    auto dbl = t * half * half;
    iv = isolate_min_positive_root(dbl);
    REQUIRE(iv);
    CHECK(iv->lo < Rat(1, 2));
    CHECK(iv->hi >= Rat(1, 2));

    CHECK_FALSE(isolate_min_positive_root(t * t + one).has_value());
    CHECK_FALSE(isolate_min_positive_root(t + one).has_value());
}

TEST_CASE("interpolate") {
    RatVec xs{0, 1, 2, 5}, ys;
    UniPoly p(RatVec{1, -2, 0, 3});
    for (auto& x : xs) ys.push_back(p.eval(x));
    CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("eps valuation and sign") {
    EpsScalar e = EpsScalar::eps();
    EpsScalar a = e - e * e;
    CHECK(eps_val(a) == 1);
    CHECK(eps_sign(a) == 1);
    EpsScalar b = (EpsScalar(1) - e) / (e * e);
    CHECK(eps_val(b) == -2);
    CHECK(eps_sign(b) == 1);
    EpsScalar c = (EpsScalar(-3) * e * e * e + e * e * e * e * e) / (EpsScalar(2) + e);
    CHECK(eps_val(c) == 3);
    CHECK(eps_sign(c) == -1);
    CHECK((eval_double(c, 1e-6) < 0) == (eps_sign(c) < 0));
    CHECK(eps_leading_coefficient(c) == Rat(-3, 2));
    CHECK(eps_val(EpsScalar(0)) == kValuationInfinity);
    CHECK(eps_sign(EpsScalar(0)) == 0);
    CHECK(EpsScalar(0) < e);
    CHECK(e < EpsScalar(Rat(1, 1000000)));
}

TEST_CASE("eps valuation is multiplicative") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-4, 4);
    auto rand_poly = [&]() {
        RatVec c(4);
        for (auto& x : c) x = d(rng);
        return UniPoly(c);
    };
    for (int trial = 0; trial < 50; ++trial) {
        UniPoly n1 = rand_poly(), d1 = rand_poly(), n2 = rand_poly(), d2 = rand_poly();
        if (n1.is_zero() || d1.is_zero() || n2.is_zero() || d2.is_zero()) continue;
        EpsScalar x(n1, d1), y(n2, d2);
        CHECK(eps_val(x * y) == eps_val(x) + eps_val(y));
        CHECK(eps_sign(x * y) == eps_sign(x) * eps_sign(y));
        CHECK((eval_double(x, 1e-5) > 0) == (eps_sign(x) > 0));
    }
}
