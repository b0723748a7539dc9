#ifndef CHENLEGENDRE_GAUSSIAN_RATIONAL_HPP
#define CHENLEGENDRE_GAUSSIAN_RATIONAL_HPP

#include <complex>
#include <string>

#include "chenlegendre/rational.hpp"

namespace chl {

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT
    GaussianRational(long long re) : re_(re) {}           // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// Renders as "p/q+r/s*i" (or "p/q-r/s*i" for negative imaginary part).
    std::string str() const;
    static GaussianRational parse(const std::string& text);

  private:
    Rational re_;
    Rational im_;
};

} // namespace chl

#endif
