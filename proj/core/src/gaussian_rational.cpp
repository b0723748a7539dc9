#include "chenlegendre/gaussian_rational.hpp"

namespace chl {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZeroError("gaussian rational division by zero");
    Rational n = o.norm();
    GaussianRational numer = *this * o.conj();
    re_ = numer.re() / n;
    im_ = numer.im() / n;
    return *this;
}

std::string GaussianRational::str() const {
    std::string s = re_.str();
    if (im_.sign() < 0) {
        s += "-" + (-im_).str() + "*i";
    } else {
        s += "+" + im_.str() + "*i";
    }
    return s;
}

GaussianRational GaussianRational::parse(const std::string& text) {
    // Format: "p/q+r/s*i" or "p/q-r/s*i"; a bare "p/q" is accepted as real.
    auto star = text.rfind("*i");
    if (star == std::string::npos) return {Rational::parse(text), Rational(0)};
    if (star + 2 != text.size()) throw ParseError("trailing characters after '*i' in '" + text + "'");
    // Find the sign that splits real and imaginary parts: the last '+' or '-'
    // that is not the leading sign of the real part.
    std::string::size_type split = std::string::npos;
    for (std::string::size_type k = text.size(); k-- > 1;) {
        if (k >= star) continue;
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) throw ParseError("missing real part in '" + text + "'");
    Rational re = Rational::parse(text.substr(0, split));
    Rational im = Rational::parse(text.substr(split + 1, star - split - 1));
    if (text[split] == '-') im = -im;
    return {std::move(re), std::move(im)};
}

} // namespace chl
