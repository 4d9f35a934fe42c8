#include "mmc/eps_scalar.hpp"

#include "mmc/error.hpp"

namespace mmc {

EpsScalar::EpsScalar(const Rat& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}

EpsScalar::EpsScalar(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw MmError(ErrorCode::InvalidArgument, "EpsScalar with zero denominator");
    normalize();
}

EpsScalar EpsScalar::eps() { return EpsScalar(UniPoly::identity(), UniPoly::constant(1)); }

void EpsScalar::normalize() {
    if (num_.is_zero()) {
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
    }
    Rat l = den_.leading();
    if (l != 1) {
        Rat inv = Rat(1) / l;
        num_ *= inv;
        den_ *= inv;
    }
}

EpsScalar EpsScalar::operator-() const {
    EpsScalar out = *this;
    out.num_ = -out.num_;
    return out;
}

EpsScalar& EpsScalar::operator+=(const EpsScalar& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

EpsScalar& EpsScalar::operator-=(const EpsScalar& o) { return *this += -o; }

EpsScalar& EpsScalar::operator*=(const EpsScalar& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

EpsScalar& EpsScalar::operator/=(const EpsScalar& o) {
    if (o.is_zero()) throw MmError(ErrorCode::InvalidArgument, "EpsScalar division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rat EpsScalar::eval(const Rat& e) const {
    Rat d = den_.eval(e);
    if (sgn(d) == 0) throw MmError(ErrorCode::InvalidArgument, "EpsScalar pole at evaluation point");
    return num_.eval(e) / d;
}

std::string EpsScalar::to_string() const {
    if (den_.degree() == 0) return num_.to_string("eps");
    return "(" + num_.to_string("eps") + ")/(" + den_.to_string("eps") + ")";
}

int eps_val(const EpsScalar& x) {
    if (x.is_zero()) return kValuationInfinity;
    return x.numerator().order() - x.denominator().order();
}

int eps_sign(const EpsScalar& x) {
    if (x.is_zero()) return 0;
    return sgn(x.numerator().lowest_coefficient()) * sgn(x.denominator().lowest_coefficient());
}

Rat eps_leading_coefficient(const EpsScalar& x) {
    if (x.is_zero()) return 0;
    return x.numerator().lowest_coefficient() / x.denominator().lowest_coefficient();
}

}  // namespace mmc
