#ifndef CHENLEGENDRE_PERIODS_HPP
#define CHENLEGENDRE_PERIODS_HPP

#include <array>
#include <complex>

#include <nlohmann/json_fwd.hpp>

#include "chenlegendre/rational.hpp"

namespace chl {

using Cplx = std::complex<double>;

/// Rational homology class c_alpha * alpha + c_beta * beta of a smooth fiber.
struct HomologyClass {
    Rational c_alpha;
    Rational c_beta;
};

/// Period matrix of a fiber: rows indexed by (theta0, theta1), columns by the
/// lifted cycles (alpha~, beta~); basepoint is the lambda value it lives at.
struct PeriodFrame {
    Cplx m[2][2]{};
    Cplx basepoint{};

    Cplx det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    /// Period of theta_row against the class c (in this frame's column basis).
    Cplx period(int row, const HomologyClass& c) const {
        return m[row][0] * c.c_alpha.to_double() + m[row][1] * c.c_beta.to_double();
    }
};

/// The four period functions of the Legendre family, by their hypergeometric
/// series: f0 = Ktilde(k), f1 = Etilde(k), g0 = i*Ktilde(k'), g1 = i*Etilde(k')
/// with Ktilde = pi*2F1(1/2,1/2;1;lambda), Etilde = pi*2F1(1/2,3/2;2;lambda),
/// k^2 = lambda, k'^2 = 1 - lambda.
Cplx period_f0(Cplx lambda, double tol);
Cplx period_f1(Cplx lambda, double tol);
Cplx period_g0(Cplx lambda, double tol);
Cplx period_g1(Cplx lambda, double tol);

/// Frame ((f0,g0),(f1,g1)) assembled from the series definitions verbatim.
/// Requires |lambda| < 1 and |1-lambda| < 1 (both series converge); outside
/// that lens a DomainError directs the caller to transport.
///
/// Note the beta-column of this frame is *not* parallel for the Gauss-Manin
/// connection: i*Ktilde(k') solves the Picard-Fuchs equation, but its flat
/// partner in the Etilde row is 4i*E'/lambda rather than i*Etilde(k').
/// Use flat_frame_series for a frame whose columns are both parallel.
PeriodFrame period_values(Cplx lambda, double tol);

/// Frame whose columns are parallel sections: the alpha-column is
/// (f0, f1) and the beta-column is the parallel continuation of g0, namely
/// (i*Ktilde(k'), i*(2*Ktilde(k') - (1-lambda)*Etilde(k'))/lambda).
/// Same convergence lens as period_values.
PeriodFrame flat_frame_series(Cplx lambda, double tol);

/// Reference basepoint where all cycle lifts are normalized.
inline constexpr double kReferenceBasepoint = 0.1;

/// The declared frame at lambda = 1/10: alpha- and g0-entries follow the
/// series formulas; the beta-column is completed to a parallel section.
PeriodFrame reference_frame(double tol);

nlohmann::json frame_to_json(const PeriodFrame& f);

} // namespace chl

#endif
