#ifndef CHENLEGENDRE_REGLIM_HPP
#define CHENLEGENDRE_REGLIM_HPP

#include <functional>
#include <span>
#include <vector>

#include "chenlegendre/iterint.hpp"

namespace chl {

struct RegFitResult {
    Cplx value{};               // constant coefficient c0 of the log expansion
    double residual_rms = 0.0;  // rms misfit of the model over the samples
    int fit_degree = 0;
    std::vector<double> epsilons;
    std::vector<Cplx> samples;
};

/// Dyadic sample abscissas 2^-j, j = j0 .. max(j1, j0 + params + 4) where
/// params is the column count of the fit model; the fine end extends
/// automatically when the model needs more rows.
std::vector<double> reg_epsilons(int fit_degree, int corr_log_degree, int j0, int j1);

/// Least-squares fit of
///   sum_k c_k log^k(eps)  +  boundary corrections eps^p log^q(eps)
/// over precomputed samples, returning c0. The correction block
/// (p = 1..3, q <= corr_log_degree) absorbs the O(eps) terms of the shrink
/// family; its log powers run up to the word length, which can exceed the
/// interior polynomial degree. Residual above 10*tol raises
/// RegularizationError.
RegFitResult regularized_fit(const std::vector<double>& epsilons,
                             const std::vector<Cplx>& samples, int fit_degree,
                             int corr_log_degree, double tol);

/// regularized_fit over the samples eps -> sampler(eps) at reg_epsilons().
RegFitResult regularized_limit(const std::function<Cplx(double)>& sampler, int fit_degree,
                               int corr_log_degree, int j0, int j1, double tol);

/// Sharp bound for the log degree of eps -> iterint(shrink(path,eps), forms):
/// leading chi0 run + trailing chi1 run (end divergences of the plain word)
/// plus one log per weighted period factor.
int reg_fit_degree(std::span<const WeightedForm> forms, int total_sym_degree);

/// Regularized iterated integral over a cuspidal path: the regularized limit
/// of eps -> iterint(shrink(path, eps), forms).
RegFitResult reg_iterint_fit(const Path& path, std::span<const WeightedForm> forms,
                             double tol, double ode_tol, int j0, int j1);

Cplx reg_iterint(const Path& path, std::span<const WeightedForm> forms, double tol,
                 double ode_tol, int j0, int j1);

/// Householder least squares for an m x n (m >= n) real design matrix with a
/// complex right-hand side; returns the coefficient vector.
std::vector<Cplx> least_squares(std::vector<std::vector<double>> columns,
                                std::vector<Cplx> rhs);

} // namespace chl

#endif
