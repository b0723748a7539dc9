#ifndef CHENLEGENDRE_ERRORS_HPP
#define CHENLEGENDRE_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace chl {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what = "division by zero") : Error(what) {}
};

// Evaluation of a rational function (or a connection entry) at one of its poles.
struct PoleError : Error {
    PoleError(const std::string& what, std::complex<double> where)
        : Error(what), pole(where) {}
    std::complex<double> pole;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A path hit a singular fiber (lambda in {0,1}); `t` is the offending parameter.
struct SingularityError : Error {
    SingularityError(const std::string& what, double t_bad) : Error(what), t(t_bad) {}
    double t;
};

struct IterationLimitError : Error {
    explicit IterationLimitError(const std::string& what) : Error(what) {}
};

// A word operation would exceed the configured length cutoff.
struct FiltrationError : Error {
    explicit FiltrationError(const std::string& what) : Error(what) {}
};

struct RegularizationError : Error {
    RegularizationError(const std::string& what, double resid)
        : Error(what), residual(resid) {}
    double residual;
};

struct ArityError : Error {
    explicit ArityError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct PrecisionError : Error {
    explicit PrecisionError(const std::string& what) : Error(what) {}
};

} // namespace chl

#endif
