#include "chenlegendre/reglim.hpp"

#include <cmath>

namespace chl {

std::vector<Cplx> least_squares(std::vector<std::vector<double>> columns,
                                std::vector<Cplx> rhs) {
    const std::size_t n = columns.size();
    const std::size_t m = rhs.size();
    if (n == 0 || m < n) throw DomainError("least squares needs m >= n >= 1");
    // Column scaling for conditioning.
    std::vector<double> scale(n, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += columns[j][i] * columns[j][i];
        s = std::sqrt(s);
        if (s == 0.0) s = 1.0;
        scale[j] = s;
        for (std::size_t i = 0; i < m; ++i) columns[j][i] /= s;
    }
    // Householder QR applied to the columns and the right-hand side.
    for (std::size_t k = 0; k < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < m; ++i) norm += columns[k][i] * columns[k][i];
        norm = std::sqrt(norm);
        if (norm == 0.0) throw DomainError("rank-deficient least-squares system");
        double alpha = columns[k][k] > 0 ? -norm : norm;
        std::vector<double> v(m, 0.0);
        v[k] = columns[k][k] - alpha;
        for (std::size_t i = k + 1; i < m; ++i) v[i] = columns[k][i];
        double vtv = 0.0;
        for (std::size_t i = k; i < m; ++i) vtv += v[i] * v[i];
        if (vtv == 0.0) continue;
        for (std::size_t j = k; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += v[i] * columns[j][i];
            double f = 2.0 * dot / vtv;
            for (std::size_t i = k; i < m; ++i) columns[j][i] -= f * v[i];
        }
        Cplx dotc = 0.0;
        for (std::size_t i = k; i < m; ++i) dotc += v[i] * rhs[i];
        Cplx fc = 2.0 * dotc / vtv;
        for (std::size_t i = k; i < m; ++i) rhs[i] -= fc * v[i];
    }
    // Back substitution on the upper-triangular factor.
    std::vector<Cplx> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Cplx acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= columns[j][k] * x[j];
        x[k] = acc / columns[k][k];
    }
    for (std::size_t j = 0; j < n; ++j) x[j] /= scale[j];
    return x;
}

namespace {
constexpr int kCorrectionPowers = 3; // eps^1..eps^3 boundary corrections
}

std::vector<double> reg_epsilons(int fit_degree, int corr_log_degree, int j0, int j1) {
    if (fit_degree < 0 || corr_log_degree < 0) throw DomainError("negative fit degree");
    if (j0 >= j1) throw DomainError("regularization samples need j0 < j1");
    const int params = (fit_degree + 1) + kCorrectionPowers * (corr_log_degree + 1);
    // Keep a few more samples than parameters; extend the fine end if needed.
    int jmax = std::max(j1, j0 + params + 4);
    if (jmax > 44) throw DomainError("regularization would need eps below 2^-44");
    std::vector<double> eps;
    for (int j = j0; j <= jmax; ++j) eps.push_back(std::ldexp(1.0, -j));
    return eps;
}

RegFitResult regularized_fit(const std::vector<double>& epsilons,
                             const std::vector<Cplx>& samples, int fit_degree,
                             int corr_log_degree, double tol) {
    if (epsilons.size() != samples.size() || epsilons.empty())
        throw DomainError("regularized fit needs matching nonempty samples");
    RegFitResult fit;
    fit.fit_degree = fit_degree;
    fit.epsilons = epsilons;
    fit.samples = samples;
    const std::size_t m = fit.samples.size();

    std::vector<std::vector<double>> cols;
    cols.reserve(static_cast<std::size_t>(fit_degree + 1 + kCorrectionPowers * (corr_log_degree + 1)));
    for (int k = 0; k <= fit_degree; ++k) {
        std::vector<double> col(m);
        for (std::size_t i = 0; i < m; ++i) col[i] = std::pow(std::log(fit.epsilons[i]), k);
        cols.push_back(std::move(col));
    }
    for (int p = 1; p <= kCorrectionPowers; ++p) {
        for (int q = 0; q <= corr_log_degree; ++q) {
            std::vector<double> col(m);
            for (std::size_t i = 0; i < m; ++i)
                col[i] = std::pow(fit.epsilons[i], p) * std::pow(std::log(fit.epsilons[i]), q);
            cols.push_back(std::move(col));
        }
    }

    std::vector<Cplx> coeffs = least_squares(cols, fit.samples);
    fit.value = coeffs[0];

    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        Cplx model = 0.0;
        double L = std::log(fit.epsilons[i]);
        for (int k = 0; k <= fit_degree; ++k) model += coeffs[static_cast<std::size_t>(k)] * std::pow(L, k);
        std::size_t idx = static_cast<std::size_t>(fit_degree) + 1;
        for (int p = 1; p <= kCorrectionPowers; ++p)
            for (int q = 0; q <= corr_log_degree; ++q)
                model += coeffs[idx++] * std::pow(fit.epsilons[i], p) * std::pow(L, q);
        rss += std::norm(model - fit.samples[i]);
    }
    fit.residual_rms = std::sqrt(rss / static_cast<double>(m));
    if (fit.residual_rms > 10.0 * tol)
        throw RegularizationError(
            "regularized-limit fit residual " + std::to_string(fit.residual_rms) +
                " exceeds 10*tol = " + std::to_string(10.0 * tol),
            fit.residual_rms);
    return fit;
}

RegFitResult regularized_limit(const std::function<Cplx(double)>& sampler, int fit_degree,
                               int corr_log_degree, int j0, int j1, double tol) {
    std::vector<double> eps = reg_epsilons(fit_degree, corr_log_degree, j0, j1);
    std::vector<Cplx> samples;
    samples.reserve(eps.size());
    for (double e : eps) samples.push_back(sampler(e));
    return regularized_fit(eps, samples, fit_degree, corr_log_degree, tol);
}

int reg_fit_degree(std::span<const WeightedForm> forms, int total_sym_degree) {
    int lead = 0;
    for (const auto& f : forms) {
        if (f.omega != BaseForm::chi0) break;
        ++lead;
    }
    int trail = 0;
    for (auto it = forms.rbegin(); it != forms.rend(); ++it) {
        if (it->omega != BaseForm::chi1) break;
        ++trail;
    }
    int deg = lead + trail + total_sym_degree;
    return std::min<int>(deg, static_cast<int>(forms.size()) + total_sym_degree);
}

RegFitResult reg_iterint_fit(const Path& path, std::span<const WeightedForm> forms,
                             double tol, double ode_tol, int j0, int j1) {
    if (!path.cuspidal())
        throw DomainError("reg_iterint needs a cuspidal path; use iterint otherwise");
    if (forms.empty()) throw DomainError("reg_iterint needs at least one form");
    auto sampler = [&](double eps) { return iterint(path.shrink(eps), forms, ode_tol); };
    return regularized_limit(sampler, reg_fit_degree(forms, 0), static_cast<int>(forms.size()),
                             j0, j1, tol);
}

Cplx reg_iterint(const Path& path, std::span<const WeightedForm> forms, double tol,
                 double ode_tol, int j0, int j1) {
    return reg_iterint_fit(path, forms, tol, ode_tol, j0, j1).value;
}

} // namespace chl
