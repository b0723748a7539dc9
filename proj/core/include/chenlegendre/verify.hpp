#ifndef CHENLEGENDRE_VERIFY_HPP
#define CHENLEGENDRE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chenlegendre/config.hpp"
#include "chenlegendre/json_util.hpp"

namespace chl {

struct SuiteResult {
    std::string name;
    bool pass = false;
    ordered_json report;
};

/// Property suites behind `chl verify <name>`:
///   hopf         - exact Hopf axioms, filtration, bar differential on B^0
///   shuffle      - iterated-integral axioms + the pairing shuffle relation
///   dual         - the duality report (both substitute_forms variants)
///   homotopy     - homotopy invariance of iterint, transport and pair
///   augmentation - vanishing on powers of the augmentation ideal
///   gm           - Gauss-Manin derivation, transport vs series, Wronskian
///   monodromy    - local monodromy matrices and transport functoriality
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const Config& cfg, std::uint64_t seed);

} // namespace chl

#endif
