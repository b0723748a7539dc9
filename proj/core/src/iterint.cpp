#include "chenlegendre/iterint.hpp"

#include <algorithm>
#include <cmath>

#include "chenlegendre/ode.hpp"

namespace chl {

Cplx base_form_coeff(BaseForm f, Cplx lambda) {
    return f == BaseForm::chi0 ? 1.0 / lambda : 1.0 / (1.0 - lambda);
}

Cplx iterint(const Path& path, std::span<const WeightedForm> forms, double tol) {
    if (forms.empty()) throw DomainError("iterint needs at least one form");
    if (path.cuspidal())
        throw DomainError("iterint needs interior endpoints; use reg_iterint for cuspidal paths");
    const std::size_t r = forms.size();

    OdeRhs rhs = [&](double t, const OdeState& y, OdeState& dy) {
        Cplx lambda = path.point(t);
        Cplx om = path.one_minus_point(t);
        if (std::abs(lambda) < 1e-13 || std::abs(om) < 1e-13)
            throw SingularityError("form pole on the path", t);
        Cplx vel = path.velocity(t);
        for (std::size_t j = 0; j < r; ++j) {
            Cplx w = forms[j].weight ? forms[j].weight(t) : Cplx(1.0);
            Cplx base = forms[j].omega == BaseForm::chi0 ? 1.0 / lambda : 1.0 / om;
            Cplx prev = j == 0 ? Cplx(1.0) : y[j - 1];
            dy[j] = w * base * vel * prev;
        }
    };

    OdeState y(r, 0.0);
    OdeOptions opts;
    opts.rtol = tol;
    opts.atol = tol;
    double prev = 0.0;
    for (double joint : path.joint_parameters()) {
        ode_integrate(rhs, prev, joint, y, opts);
        prev = joint;
    }
    ode_integrate(rhs, prev, 1.0, y, opts);
    return y[r - 1];
}

} // namespace chl
