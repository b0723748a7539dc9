#ifndef CHENLEGENDRE_RATIONAL_HPP
#define CHENLEGENDRE_RATIONAL_HPP

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "chenlegendre/errors.hpp"

namespace chl {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator, so equality is plain member comparison.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {} // NOLINT: implicit by design
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational reciprocal() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const;

    /// Renders as "p/q" (the denominator is printed even when it is 1).
    std::string str() const;
    static Rational parse(const std::string& text);

  private:
    void normalize();
    BigInt num_;
    BigInt den_; // > 0
};

/// Rising factorial a(a+1)...(a+n-1); the empty product is 1.
Rational pochhammer(const Rational& a, unsigned n);

} // namespace chl

#endif
