#ifndef CHENLEGENDRE_ITERINT_HPP
#define CHENLEGENDRE_ITERINT_HPP

#include <functional>
#include <span>

#include "chenlegendre/barword.hpp"
#include "chenlegendre/path.hpp"

namespace chl {

/// Base 1-form with a pointwise weight along a given path; an empty weight
/// handle means the constant weight 1.
struct WeightedForm {
    BaseForm omega = BaseForm::chi0;
    std::function<Cplx(double)> weight; // t in [0,1] -> complex
};

/// chi0 -> 1/lambda, chi1 -> 1/(1-lambda).
Cplx base_form_coeff(BaseForm f, Cplx lambda);

/// Iterated integral of weighted base forms over a path with interior
/// endpoints, via the triangular ODE system I_0 = 1,
/// dI_j/dt = (w_j * f_j)(gamma(t)) * gamma'(t) * I_{j-1}(t); returns I_r(1).
/// Cuspidal paths are rejected (use reg_iterint); the forms list must be
/// nonempty; a form pole on the interior raises SingularityError.
Cplx iterint(const Path& path, std::span<const WeightedForm> forms, double tol);

} // namespace chl

#endif
