#include "chenlegendre/hypergeometric.hpp"

#include <cmath>

#include "chenlegendre/errors.hpp"

namespace chl {

std::complex<double> gauss_2f1(const HypergeometricParams& p, std::complex<double> z,
                               double tol) {
    const double a = p.a.to_double();
    const double b = p.b.to_double();
    const double c = p.c.to_double();
    if (c <= 0.0 && std::abs(c - std::round(c)) < 1e-15)
        throw DomainError("2F1 with nonpositive integer c");
    const double az = std::abs(z);
    if (az >= 1.0)
        throw DomainError("2F1 series zone requires |z| < 1");
    if (az == 0.0) return 1.0;

    constexpr long kMaxTerms = 1000000;
    std::complex<double> term = 1.0;
    std::complex<double> sum = 1.0;
    for (long n = 0; n < kMaxTerms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        // Ratio bound: beyond this n the parameter factor is within
        // max(1, current factor) of its limit 1, so the tail is dominated by
        // a geometric series with ratio q.
        double factor = std::abs((a + dn + 1) * (b + dn + 1) / ((c + dn + 1) * (dn + 2.0)));
        double q = az * std::max(1.0, factor);
        if (q < 1.0) {
            double tail = std::abs(term) * q / (1.0 - q);
            if (tail < tol) return sum;
        }
    }
    throw IterationLimitError("2F1 series did not reach tolerance within 1e6 terms");
}

} // namespace chl
