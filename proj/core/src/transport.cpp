#include "chenlegendre/transport.hpp"

#include <cmath>

#include "chenlegendre/ode.hpp"

namespace chl {

namespace {

constexpr double kSingularGuard = 1e-13;

void check_regular(Cplx lambda, double t) {
    if (std::abs(lambda) < kSingularGuard || std::abs(lambda - 1.0) < kSingularGuard)
        throw SingularityError("path touches a singular fiber", t);
}

OdeRhs frame_rhs(const Path& path, const GaussManinMatrix& gm) {
    return [&path, &gm](double t, const OdeState& y, OdeState& dy) {
        Cplx lambda = path.point(t);
        Cplx om = path.one_minus_point(t);
        if (std::abs(lambda) < kSingularGuard || std::abs(om) < kSingularGuard)
            throw SingularityError("path touches a singular fiber", t);
        Cplx vel = path.velocity(t);
        auto m = gm.transport_matrix(lambda, om);
        // State layout: row-major 2x2 frame.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                dy[2 * i + j] = (m[i][0] * y[j] + m[i][1] * y[2 + j]) * vel;
    };
}

void integrate_frame(const Path& path, double t0, double t1, OdeState& y, double tol) {
    OdeOptions opts;
    opts.rtol = tol;
    opts.atol = tol;
    OdeRhs rhs = frame_rhs(path, legendre_gauss_manin());
    // Restart at segment joints so the stepper never straddles a kink.
    double prev = t0;
    auto joints = path.joint_parameters();
    if (t1 < t0) std::reverse(joints.begin(), joints.end());
    for (double joint : joints) {
        bool inside = t1 > t0 ? (joint > t0 && joint < t1) : (joint < t0 && joint > t1);
        if (!inside) continue;
        ode_integrate(rhs, prev, joint, y, opts);
        prev = joint;
    }
    ode_integrate(rhs, prev, t1, y, opts);
}

} // namespace

PeriodFrame gm_transport(const Path& path, const PeriodFrame& start, double tol) {
    if (std::abs(start.basepoint - path.start()) > 1e-9)
        throw DomainError("frame basepoint does not match the path start");
    OdeState y(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) y[2 * i + j] = start.m[i][j];
    integrate_frame(path, 0.0, 1.0, y, tol);
    PeriodFrame out;
    out.basepoint = path.end();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out.m[i][j] = y[2 * i + j];
    return out;
}

TransportResult gm_transport_checked(const Path& path, const PeriodFrame& start, double tol) {
    TransportResult r;
    r.frame = gm_transport(path, start, tol);
    PeriodFrame fine = gm_transport(path, start, tol / 16.0);
    double err = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            err = std::max(err, std::abs(r.frame.m[i][j] - fine.m[i][j]));
    r.global_error_estimate = err;
    return r;
}

RationalMatrix2 monodromy(const Path& loop, double tol) {
    if (std::abs(loop.start() - loop.end()) > 1e-12)
        throw DomainError("monodromy needs a closed loop");
    PeriodFrame base = flat_frame_series(loop.start(), tol);
    PeriodFrame moved = gm_transport(loop, base, tol);
    // M = base^{-1} * moved.
    Cplx det = base.det();
    Cplx inv[2][2] = {{base.m[1][1] / det, -base.m[0][1] / det},
                      {-base.m[1][0] / det, base.m[0][0] / det}};
    RationalMatrix2 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Cplx entry = inv[i][0] * moved.m[0][j] + inv[i][1] * moved.m[1][j];
            if (std::abs(entry.imag()) > 1e-6)
                throw PrecisionError("monodromy entry has a non-real part beyond tolerance");
            double x = entry.real();
            double best_err = 1e9;
            long best_p = 0, best_q = 1;
            for (long q = 1; q <= 8; ++q) {
                long p = std::lround(x * static_cast<double>(q));
                double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
                if (err < best_err) {
                    best_err = err;
                    best_p = p;
                    best_q = q;
                }
            }
            if (best_err > 1e-6)
                throw PrecisionError("monodromy entry is not rational with denominator <= 8");
            out.m[i][j] = Rational(BigInt(best_p), BigInt(best_q));
        }
    }
    return out;
}

} // namespace chl
