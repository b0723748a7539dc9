#ifndef CHENLEGENDRE_CONFIG_HPP
#define CHENLEGENDRE_CONFIG_HPP

#include "chenlegendre/pairing.hpp"

namespace chl {

/// Runtime configuration shared by the CLI and the verification suites.
/// Environment variables with the CHL_ prefix override the defaults; explicit
/// flags override the environment.
struct Config {
    double tol = 1e-10;
    double ode_tol = 1e-12;
    int reglim_j0 = 10;
    int reglim_j1 = 30;
    int sym_cutoff = 4;
    int length_cutoff = 4;

    void validate() const;
    BarAlgebra algebra() const { return {sym_cutoff, length_cutoff}; }
    PairOptions pair_options(double tolerance) const {
        return {tolerance, ode_tol, reglim_j0, reglim_j1};
    }

    /// Reads CHL_TOL, CHL_ODE_TOL, CHL_REGLIM_J0, CHL_REGLIM_J1,
    /// CHL_SYM_CUTOFF, CHL_LENGTH_CUTOFF on top of the defaults.
    static Config from_env();
};

} // namespace chl

#endif
