#include "mmc/mpoly.hpp"

#include "mmc/error.hpp"

#include <mutex>

namespace mmc {

MPoly MPoly::constant(size_t nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(size_t nvars, size_t index) {
    Monomial m(nvars, 0);
    m.at(index) = 1;
    return term(m, 1);
}

MPoly MPoly::term(const Monomial& m, const Rat& c) {
    MPoly p(m.size());
    p.add_term(m, c);
    return p;
}

MPoly MPoly::linear_form(const RatVec& coeffs) {
    MPoly p(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        Monomial m(coeffs.size(), 0);
        m[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return monomial_degree(terms_.begin()->first);
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [m, c] : terms_) {
        if (monomial_degree(m) != d) return false;
    }
    return true;
}

Rat MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (m.size() != nvars_) throw MmError(ErrorCode::DimensionMismatch, "monomial arity mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (o.nvars_ != nvars_) throw MmError(ErrorCode::DimensionMismatch, "polynomial ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (o.nvars_ != nvars_) throw MmError(ErrorCode::DimensionMismatch, "polynomial ring mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_) throw MmError(ErrorCode::DimensionMismatch, "polynomial ring mismatch");
    MPoly out(a.nvars_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly result = constant(nvars_, 1);
    MPoly base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

Rat MPoly::eval(const RatVec& point) const {
    if (point.size() != nvars_) throw MmError(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
    Rat s = 0;
    Rat t;
    Rat p;
    for (const auto& [m, c] : terms_) {
        t = c;
        for (size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (sgn(point[i]) == 0) {
                t = 0;
                break;
            }
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), static_cast<unsigned long>(m[i]));
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), static_cast<unsigned long>(m[i]));
            t *= p;
        }
        s += t;
    }
    return s;
}

MPoly MPoly::derivative(size_t var) const {
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.at(var) == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * m[var]);
    }
    return out;
}

MPoly MPoly::homogeneous_part(int d) const {
    MPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (monomial_degree(m) == d) out.terms_.emplace(m, c);
    }
    return out;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (images.size() != nvars_) throw MmError(ErrorCode::DimensionMismatch, "substitute: wrong image count");
    if (images.empty()) return *this;
    const size_t target = images[0].nvars();
    // cache powers of each image
    std::vector<std::vector<MPoly>> powers(nvars_);
    MPoly out(target);
    for (const auto& [m, c] : terms_) {
        MPoly t = constant(target, c);
        for (size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, 1));
            while (pw.size() <= static_cast<size_t>(m[i])) pw.push_back(pw.back() * images[i]);
            t = t * pw[static_cast<size_t>(m[i])];
        }
        out += t;
    }
    return out;
}

MPoly MPoly::substitute_linear(const QMatrix& change) const {
    if (change.rows() != nvars_ || change.cols() != nvars_)
        throw MmError(ErrorCode::DimensionMismatch, "substitute_linear: matrix shape");
    std::vector<MPoly> images;
    images.reserve(nvars_);
    for (size_t i = 0; i < nvars_; ++i) images.push_back(linear_form(change.row(i)));
    return substitute(images);
}

UniPoly MPoly::restrict_to_line(const RatVec& base, const RatVec& dir) const {
    if (base.size() != nvars_ || dir.size() != nvars_)
        throw MmError(ErrorCode::DimensionMismatch, "restrict_to_line: wrong vector length");
    std::vector<UniPoly> lin(nvars_);
    for (size_t i = 0; i < nvars_; ++i) lin[i] = UniPoly(RatVec{base[i], dir[i]});
    std::vector<std::vector<UniPoly>> powers(nvars_);
    UniPoly out;
    for (const auto& [m, c] : terms_) {
        UniPoly t = UniPoly::constant(c);
        for (size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(UniPoly::constant(1));
            while (pw.size() <= static_cast<size_t>(m[i])) pw.push_back(pw.back() * lin[i]);
            t *= pw[static_cast<size_t>(m[i])];
        }
        out += t;
    }
    return out;
}

MPoly MPoly::remap(size_t new_nvars, const std::vector<size_t>& map) const {
    if (map.size() != nvars_) throw MmError(ErrorCode::DimensionMismatch, "remap: wrong map length");
    MPoly out(new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_nvars, 0);
        for (size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (map[i] >= new_nvars) throw MmError(ErrorCode::DimensionMismatch, "remap: variable dropped but used");
            nm[map[i]] += m[i];
        }
        out.add_term(nm, c);
    }
    return out;
}

Rat poly_eval(const MPoly& p, const RatVec& point) { return p.eval(point); }

MPoly poly_substitute_linear(const MPoly& p, const QMatrix& change) {
    if (change.rows() != change.cols() || sgn(mat_det(change)) == 0)
        throw MmError(ErrorCode::SingularMatrix, "linear change of coordinates is singular");
    return p.substitute_linear(change);
}

size_t binomial(size_t n, size_t k) {
    if (k > n) return 0;
    size_t r = 1;
    for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

MonomialBasis::MonomialBasis(size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (degree < 0) return;
    Monomial m(nvars, 0);
    // descending lex among monomials of fixed degree
    auto rec = [&](auto&& self, size_t var, int remaining) -> void {
        if (var + 1 == nvars_) {
            m[var] = remaining;
            monomials_.push_back(m);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m[var] = e;
            self(self, var + 1, remaining - e);
        }
        m[var] = 0;
    };
    if (nvars_ == 0) {
        if (degree == 0) monomials_.push_back(m);
    } else {
        rec(rec, 0, degree);
    }
    for (size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::get(size_t nvars, int degree) {
    static std::mutex mu;
    static std::map<std::pair<size_t, int>, std::shared_ptr<const MonomialBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto b = std::make_shared<const MonomialBasis>(nvars, degree);
    cache.emplace(key, b);
    return b;
}

size_t MonomialBasis::index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw MmError(ErrorCode::DimensionMismatch, "monomial not in basis (wrong degree?)");
    return it->second;
}

RatVec MonomialBasis::coords(const MPoly& p) const {
    RatVec v(monomials_.size());
    for (const auto& [m, c] : p.terms()) v[index(m)] = c;
    return v;
}

MPoly MonomialBasis::from_coords(const RatVec& v) const {
    if (v.size() != monomials_.size()) throw MmError(ErrorCode::DimensionMismatch, "from_coords: wrong length");
    MPoly p(nvars_);
    for (size_t i = 0; i < v.size(); ++i) p.add_term(monomials_[i], v[i]);
    return p;
}

RatVec MonomialBasis::evaluation_row(const RatVec& point) const {
    RatVec row(monomials_.size());
    for (size_t i = 0; i < monomials_.size(); ++i) row[i] = MPoly::term(monomials_[i], 1).eval(point);
    return row;
}

}  // namespace mmc
