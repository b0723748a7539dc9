#include "chenlegendre/periods.hpp"

#include <numbers>

#include <nlohmann/json.hpp>

#include "chenlegendre/errors.hpp"
#include "chenlegendre/hypergeometric.hpp"
#include "chenlegendre/json_util.hpp"

namespace chl {

namespace {

const HypergeometricParams kParamsK{Rational(1, 2), Rational(1, 2), Rational(1)};
const HypergeometricParams kParamsE{Rational(1, 2), Rational(3, 2), Rational(2)};

constexpr double kPi = std::numbers::pi;

void require_f_zone(Cplx lambda) {
    if (std::abs(lambda) >= 1.0)
        throw DomainError("f-periods need |lambda| < 1; use gm_transport to continue");
}

void require_g_zone(Cplx lambda) {
    if (std::abs(1.0 - lambda) >= 1.0)
        throw DomainError("g-periods need |1-lambda| < 1; use gm_transport to continue");
}

} // namespace

Cplx period_f0(Cplx lambda, double tol) {
    require_f_zone(lambda);
    return kPi * gauss_2f1(kParamsK, lambda, tol);
}

Cplx period_f1(Cplx lambda, double tol) {
    require_f_zone(lambda);
    return kPi * gauss_2f1(kParamsE, lambda, tol);
}

Cplx period_g0(Cplx lambda, double tol) {
    require_g_zone(lambda);
    return Cplx(0, 1) * kPi * gauss_2f1(kParamsK, 1.0 - lambda, tol);
}

Cplx period_g1(Cplx lambda, double tol) {
    require_g_zone(lambda);
    return Cplx(0, 1) * kPi * gauss_2f1(kParamsE, 1.0 - lambda, tol);
}

PeriodFrame period_values(Cplx lambda, double tol) {
    require_f_zone(lambda);
    require_g_zone(lambda);
    PeriodFrame f;
    f.basepoint = lambda;
    f.m[0][0] = period_f0(lambda, tol);
    f.m[1][0] = period_f1(lambda, tol);
    f.m[0][1] = period_g0(lambda, tol);
    f.m[1][1] = period_g1(lambda, tol);
    return f;
}

PeriodFrame flat_frame_series(Cplx lambda, double tol) {
    require_f_zone(lambda);
    require_g_zone(lambda);
    PeriodFrame f;
    f.basepoint = lambda;
    f.m[0][0] = period_f0(lambda, tol);
    f.m[1][0] = period_f1(lambda, tol);
    Cplx ktp = gauss_2f1(kParamsK, 1.0 - lambda, tol); // Ktilde(k')/pi
    Cplx etp = gauss_2f1(kParamsE, 1.0 - lambda, tol); // Etilde(k')/pi
    f.m[0][1] = Cplx(0, 1) * kPi * ktp;
    f.m[1][1] = Cplx(0, 1) * kPi * (2.0 * ktp - (1.0 - lambda) * etp) / lambda;
    return f;
}

PeriodFrame reference_frame(double tol) {
    return flat_frame_series(kReferenceBasepoint, tol);
}

nlohmann::json frame_to_json(const PeriodFrame& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 2; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 2; ++j) row.push_back(complex_to_json(f.m[i][j]));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace chl
