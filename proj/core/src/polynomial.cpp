#include "chenlegendre/polynomial.hpp"

namespace chl {

Polynomial::Polynomial(GaussianRational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
    strip();
}

Polynomial Polynomial::lambda() {
    return Polynomial(std::vector<GaussianRational>{GaussianRational(0), GaussianRational(1)});
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const GaussianRational& Polynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    strip();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    strip();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<GaussianRational> result(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            result[j + k] += coeffs_[j] * o.coeffs_[k];
    coeffs_ = std::move(result);
    strip();
    return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& s) {
    for (auto& c : coeffs_) c *= s;
    strip();
    return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Polynomial rem = *this;
    Polynomial quot;
    int dd = divisor.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
        GaussianRational factor = rem.leading() / divisor.leading();
        int shift = rem.degree() - dd;
        std::vector<GaussianRational> term(static_cast<std::size_t>(shift) + 1);
        term.back() = factor;
        Polynomial t(std::move(term));
        quot += t;
        rem -= t * divisor;
    }
    return {std::move(quot), std::move(rem)};
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussianRational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * GaussianRational(Rational(static_cast<long long>(k)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    GaussianRational inv = GaussianRational(1) / leading();
    r *= inv;
    return r;
}

std::complex<double> Polynomial::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k].to_complex();
    return acc;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[k].str() + ")";
        if (k == 1) s += "*lambda";
        if (k > 1) s += "*lambda^" + std::to_string(k);
    }
    return s;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? Polynomial{} : r.monic(); // keeps coefficient growth in check
    }
    if (a.is_zero()) return {};
    return a.monic();
}

} // namespace chl
