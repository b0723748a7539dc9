#include "chenlegendre/rational_function.hpp"

#include <cmath>

namespace chl {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(GaussianRational(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    GaussianRational lead = den_.leading();
    if (!(lead == GaussianRational(1))) {
        GaussianRational inv = GaussianRational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DivisionByZeroError("rational function division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::complex<double> RationalFunction::eval(std::complex<double> z) const {
    std::complex<double> d = den_.eval(z);
    if (std::abs(d) == 0.0) throw PoleError("rational function evaluated at a pole", z);
    return num_.eval(z) / d;
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd')/d^2
    Polynomial n = num_.derivative() * den_ - num_ * den_.derivative();
    Polynomial d = den_ * den_;
    return {std::move(n), std::move(d)};
}

std::string RationalFunction::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace chl
