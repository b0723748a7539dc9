#include "chenlegendre/config.hpp"

#include <cstdlib>
#include <string>

namespace chl {

namespace {

double env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stod(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid value for ") + name + ": '" + v + "'");
    }
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid value for ") + name + ": '" + v + "'");
    }
}

} // namespace

void Config::validate() const {
    if (!(tol > 0.0) || !(ode_tol > 0.0)) throw DomainError("tolerances must be positive");
    if (reglim_j0 >= reglim_j1) throw DomainError("reglim samples need j0 < j1");
    if (reglim_j0 < 1 || reglim_j1 > 44) throw DomainError("reglim samples need 1 <= j0 < j1 <= 44");
    if (sym_cutoff < 0 || length_cutoff < 0) throw DomainError("cutoffs must be nonnegative");
}

Config Config::from_env() {
    Config c;
    c.tol = env_double("CHL_TOL", c.tol);
    c.ode_tol = env_double("CHL_ODE_TOL", c.ode_tol);
    c.reglim_j0 = env_int("CHL_REGLIM_J0", c.reglim_j0);
    c.reglim_j1 = env_int("CHL_REGLIM_J1", c.reglim_j1);
    c.sym_cutoff = env_int("CHL_SYM_CUTOFF", c.sym_cutoff);
    c.length_cutoff = env_int("CHL_LENGTH_CUTOFF", c.length_cutoff);
    c.validate();
    return c;
}

} // namespace chl
