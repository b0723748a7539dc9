#ifndef CHENLEGENDRE_POLYNOMIAL_HPP
#define CHENLEGENDRE_POLYNOMIAL_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "chenlegendre/gaussian_rational.hpp"

namespace chl {

/// Dense polynomial in lambda over Q(i). Coefficient k is the coefficient of
/// lambda^k; trailing zeros are stripped, the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(GaussianRational constant); // NOLINT
    explicit Polynomial(std::vector<GaussianRational> coeffs);

    static Polynomial lambda(); // the monomial "lambda"

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    GaussianRational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : GaussianRational();
    }
    const GaussianRational& leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const GaussianRational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Quotient and remainder of exact division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    Polynomial derivative() const;
    Polynomial monic() const;
    std::complex<double> eval(std::complex<double> z) const;
    std::string str() const;

  private:
    void strip();
    std::vector<GaussianRational> coeffs_;
};

/// Monic greatest common divisor by the Euclidean algorithm over Q(i)[lambda].
Polynomial poly_gcd(Polynomial a, Polynomial b);

} // namespace chl

#endif
