#ifndef CHENLEGENDRE_TRANSPORT_HPP
#define CHENLEGENDRE_TRANSPORT_HPP

#include "chenlegendre/gauss_manin.hpp"
#include "chenlegendre/path.hpp"
#include "chenlegendre/periods.hpp"
#include "chenlegendre/rational.hpp"

namespace chl {

/// Parallel transport of a period frame along a path: solves
/// dP/dt = A(gamma(t))^T P dgamma/dt with the adaptive embedded
/// Runge-Kutta pair. The frame basepoint must equal the path start.
/// Throws SingularityError (with the offending t) if the path touches a
/// singular fiber.
PeriodFrame gm_transport(const Path& path, const PeriodFrame& start, double tol);

struct TransportResult {
    PeriodFrame frame;
    /// Step-doubling estimate: difference against a run at tol/16.
    double global_error_estimate = 0.0;
};

/// gm_transport plus a global error estimate from an independent run at a
/// tightened tolerance.
TransportResult gm_transport_checked(const Path& path, const PeriodFrame& start, double tol);

struct RationalMatrix2 {
    Rational m[2][2];
};

/// Monodromy of a closed loop based in the series lens: the change-of-basis
/// matrix M with transported columns = original frame * M, rounded to
/// rationals with denominator <= 8. Throws PrecisionError when the entries
/// are further than 1e-6 from such rationals (or carry imaginary parts).
RationalMatrix2 monodromy(const Path& loop, double tol);

} // namespace chl

#endif
