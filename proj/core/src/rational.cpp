#include "chenlegendre/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace chl {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DivisionByZeroError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw DivisionByZeroError("rational division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DivisionByZeroError("reciprocal of zero");
    return Rational(den_, num_);
}

double Rational::to_double() const {
    // Exact conversion can overflow for huge operands; divide as floating
    // point only after reducing through cpp_int's own conversion.
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) throw DivisionByZeroError("parsed rational with zero denominator");
        return Rational(std::move(n), std::move(d));
    } catch (const std::exception& e) {
        throw ParseError("invalid rational '" + text + "': " + e.what());
    }
}

Rational pochhammer(const Rational& a, unsigned n) {
    Rational result = 1;
    Rational factor = a;
    for (unsigned i = 0; i < n; ++i) {
        result *= factor;
        factor += 1;
    }
    return result;
}

} // namespace chl
