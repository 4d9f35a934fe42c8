#include "mmc/unipoly.hpp"

#include "mmc/error.hpp"

#include <sstream>

namespace mmc {

UniPoly::UniPoly(RatVec coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(RatVec{c}); }

UniPoly UniPoly::monomial(const Rat& c, size_t degree) {
    RatVec v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::identity() { return monomial(1, 1); }

void UniPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

int UniPoly::order() const {
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
    }
    return -1;
}

Rat UniPoly::lowest_coefficient() const {
    int o = order();
    return o < 0 ? Rat(0) : coeffs_[static_cast<size_t>(o)];
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= t;
        acc += coeffs_[i];
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    RatVec d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly out = *this;
    Rat l = leading();
    for (auto& c : out.coeffs_) c /= l;
    return out;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= inner;
        acc += constant(coeffs_[i]);
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    RatVec r(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (sgn(o.coeffs_[j]) != 0) r[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rat& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw MmError(ErrorCode::InvalidArgument, "polynomial division by zero");
    RatVec rem = a.coefficients();
    const RatVec& bc = b.coefficients();
    const int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    RatVec q(static_cast<size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        const Rat& lead = rem[static_cast<size_t>(i)];
        if (sgn(lead) == 0) continue;
        Rat f = lead / bc.back();
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= f * bc[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a;
    UniPoly y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 0) return p.monic();
    UniPoly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    if (p.is_zero()) throw MmError(ErrorCode::InvalidArgument, "Sturm sequence of zero polynomial");
    std::vector<UniPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        UniPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
        // positive rescaling keeps sign pattern and tames coefficient growth
        if (!r.is_zero()) {
            Rat l = abs(r.leading());
            r *= Rat(1) / l;
        }
        seq.push_back(std::move(r));
    }
    seq.pop_back();
    return seq;
}

namespace {

int sign_changes(const std::vector<UniPoly>& seq, const Rat& x) {
    int changes = 0;
    int last = 0;
    for (const auto& q : seq) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int count_roots(const std::vector<UniPoly>& sturm, const Rat& a, const Rat& b) {
    return sign_changes(sturm, a) - sign_changes(sturm, b);
}

int count_roots(const UniPoly& p, const Rat& a, const Rat& b) {
    return count_roots(sturm_sequence(squarefree_part(p)), a, b);
}

Rat cauchy_bound(const UniPoly& p) {
    Rat m = 0;
    const Rat& l = p.leading();
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = abs(p.coeff(static_cast<size_t>(i)) / l);
        if (r > m) m = r;
    }
    return m + 1;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rat& width) {
    auto seq = sturm_sequence(squarefree_part(p));
    while (iv.hi - iv.lo > width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        if (count_roots(seq, iv.lo, mid) >= 1) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
        }
    }
    return iv;
}

std::optional<RootInterval> isolate_min_positive_root(const UniPoly& p, const std::optional<Rat>& width) {
    if (p.is_zero()) throw MmError(ErrorCode::InvalidArgument, "root isolation of zero polynomial");
    UniPoly q = squarefree_part(p);
    if (q.degree() <= 0) return std::nullopt;
    // drop a root at the origin, it is never positive
    if (sgn(q.coeff(0)) == 0) q = divmod(q, UniPoly::identity()).first;
    if (q.degree() <= 0) return std::nullopt;
    auto seq = sturm_sequence(q);
    Rat hi = cauchy_bound(q);
    Rat lo = 0;
    if (count_roots(seq, lo, hi) == 0) return std::nullopt;
    // shrink hi until (0, hi] holds exactly one root, and move lo off zero
    while (count_roots(seq, lo, hi) > 1 || sgn(lo) == 0) {
        Rat mid = (lo + hi) / 2;
        if (count_roots(seq, lo, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootInterval iv{lo, hi};
    if (width) iv = refine_root(q, iv, *width);
    return iv;
}

UniPoly interpolate(const RatVec& xs, const RatVec& ys) {
    if (xs.size() != ys.size()) throw MmError(ErrorCode::DimensionMismatch, "interpolate: size mismatch");
    // Newton divided differences
    const size_t n = xs.size();
    RatVec coef = ys;
    for (size_t j = 1; j < n; ++j) {
        for (size_t i = n - 1; i >= j; --i) {
            Rat den = xs[i] - xs[i - j];
            if (sgn(den) == 0) throw MmError(ErrorCode::InvalidArgument, "interpolate: repeated node");
            coef[i] = (coef[i] - coef[i - 1]) / den;
            if (i == j) break;
        }
    }
    UniPoly result;
    for (size_t k = n; k-- > 0;) {
        result *= UniPoly(RatVec{-xs[k], Rat(1)});
        result += UniPoly::constant(coef[k]);
    }
    return result;
}

}  // namespace mmc
