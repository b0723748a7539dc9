#ifndef CHENLEGENDRE_JSON_UTIL_HPP
#define CHENLEGENDRE_JSON_UTIL_HPP

#include <complex>
#include <string>

#include <nlohmann/json.hpp>

namespace chl {

using ordered_json = nlohmann::ordered_json;

/// Decimal with 17 significant digits (round-trips a double exactly).
std::string fmt_double(double x);

nlohmann::json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const nlohmann::json& j);

/// Serializes with every floating-point number rendered as decimal with 17
/// significant digits (nlohmann's dump would shorten them). indent < 0 gives
/// the compact form.
std::string dump_json_17(const ordered_json& j, int indent = 2);

} // namespace chl

#endif
