#ifndef CHENLEGENDRE_HYPERGEOMETRIC_HPP
#define CHENLEGENDRE_HYPERGEOMETRIC_HPP

#include <complex>

#include "chenlegendre/rational.hpp"

namespace chl {

struct HypergeometricParams {
    Rational a, b, c;
};

/// Gauss series 2F1(a,b;c;z) = sum (a)_n (b)_n / ((c)_n n!) z^n by direct
/// summation. Requires |z| < 1; guaranteed fast for |z| <= 0.75, and slower
/// but still convergent up to the unit circle. The tail is bounded by the
/// term ratio; if 10^6 terms do not reach `tol` an IterationLimitError is
/// raised (this is how near-boundary divergence, e.g. c-a-b = 0 at z -> 1,
/// surfaces). c must not be a nonpositive integer.
std::complex<double> gauss_2f1(const HypergeometricParams& p, std::complex<double> z,
                               double tol);

} // namespace chl

#endif
