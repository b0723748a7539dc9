#ifndef CHENLEGENDRE_ODE_HPP
#define CHENLEGENDRE_ODE_HPP

#include <complex>
#include <functional>
#include <vector>

#include "chenlegendre/errors.hpp"

namespace chl {

using Cplx = std::complex<double>;
using OdeState = std::vector<Cplx>;

/// Right-hand side: writes dy/dt into dydt (already sized like y).
using OdeRhs = std::function<void(double t, const OdeState& y, OdeState& dydt)>;

struct OdeOptions {
    double rtol = 1e-12;
    double atol = 1e-12;
    long max_steps = 4000000;
    double initial_step = 0.0; // 0 = choose automatically
};

/// Adaptive embedded Dormand-Prince 5(4) integrator from t0 to t1 (either
/// direction). Modifies y in place to the solution at t1.
void ode_integrate(const OdeRhs& rhs, double t0, double t1, OdeState& y,
                   const OdeOptions& opts = {});

/// As ode_integrate, but lands exactly on each checkpoint (sorted in the
/// direction of integration, strictly between t0 and t1) and calls
/// on_checkpoint(t, y) there before continuing.
void ode_integrate_checkpoints(const OdeRhs& rhs, double t0, double t1, OdeState& y,
                               const std::vector<double>& checkpoints,
                               const std::function<void(double, const OdeState&)>& on_checkpoint,
                               const OdeOptions& opts = {});

} // namespace chl

#endif
