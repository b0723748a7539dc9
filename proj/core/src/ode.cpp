#include "chenlegendre/ode.hpp"

#include <algorithm>
#include <cmath>

namespace chl {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

struct Stepper {
    const OdeRhs& rhs;
    std::size_t n;
    OdeState k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;

    Stepper(const OdeRhs& f, std::size_t dim) : rhs(f), n(dim) {
        for (OdeState* v : {&k1, &k2, &k3, &k4, &k5, &k6, &k7, &ytmp, &ynew}) v->assign(n, 0.0);
    }

    // One trial step; returns the error ratio (<= 1 means accept). k1 must
    // hold rhs(t, y) on entry (FSAL), and holds rhs(t+h, ynew) on accept.
    double attempt(double t, const OdeState& y, double h, double rtol, double atol) {
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Cplx ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                           e7 * k7[i]);
            double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err = std::max(err, std::abs(ei) / scale);
        }
        return err;
    }
};

void integrate_span(const OdeRhs& rhs, double t0, double t1, OdeState& y,
                    const OdeOptions& opts, Stepper& st, double& h, long& steps) {
    if (t0 == t1) return;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (h == 0.0)
        h = opts.initial_step != 0.0 ? std::abs(opts.initial_step) : span / 100.0;
    h = std::min(h, span);
    double t = t0;
    rhs(t, y, st.k1);
    while (dir * (t1 - t) > 0) {
        h = std::min(h, std::abs(t1 - t));
        double err = st.attempt(t, y, dir * h, opts.rtol, opts.atol);
        if (++steps > opts.max_steps)
            throw IterationLimitError("ODE step limit exceeded");
        if (err <= 1.0) {
            t += dir * h;
            y.swap(st.ynew);
            st.k1.swap(st.k7); // FSAL
            double grow = err == 0.0 ? 5.0 : 0.9 * std::pow(err, -0.2);
            h *= std::clamp(grow, 0.2, 5.0);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            if (!(h > 1e-300))
                throw SingularityError("ODE step size underflow near t", t);
        }
    }
}

} // namespace

void ode_integrate(const OdeRhs& rhs, double t0, double t1, OdeState& y,
                   const OdeOptions& opts) {
    Stepper st(rhs, y.size());
    double h = 0.0;
    long steps = 0;
    integrate_span(rhs, t0, t1, y, opts, st, h, steps);
}

void ode_integrate_checkpoints(const OdeRhs& rhs, double t0, double t1, OdeState& y,
                               const std::vector<double>& checkpoints,
                               const std::function<void(double, const OdeState&)>& on_checkpoint,
                               const OdeOptions& opts) {
    Stepper st(rhs, y.size());
    double h = 0.0;
    long steps = 0;
    double t = t0;
    for (double cp : checkpoints) {
        integrate_span(rhs, t, cp, y, opts, st, h, steps);
        t = cp;
        on_checkpoint(t, y);
    }
    integrate_span(rhs, t, t1, y, opts, st, h, steps);
}

} // namespace chl
