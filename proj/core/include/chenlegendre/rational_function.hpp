#ifndef CHENLEGENDRE_RATIONAL_FUNCTION_HPP
#define CHENLEGENDRE_RATIONAL_FUNCTION_HPP

#include "chenlegendre/polynomial.hpp"

namespace chl {

/// Exact ratio of polynomials in lambda over Q(i). Canonical form: numerator
/// and denominator coprime, denominator monic; this makes equality decidable
/// by coefficient comparison.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(GaussianRational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);
    RationalFunction(GaussianRational constant) // NOLINT
        : num_(std::move(constant)), den_(GaussianRational(1)) {}

    static RationalFunction lambda() { return {Polynomial::lambda(), Polynomial(GaussianRational(1))}; }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Floating evaluation; throws PoleError (carrying z) at a denominator root.
    std::complex<double> eval(std::complex<double> z) const;

    RationalFunction derivative() const;
    std::string str() const;

  private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

} // namespace chl

#endif
