#ifndef CHENLEGENDRE_GAUSS_MANIN_HPP
#define CHENLEGENDRE_GAUSS_MANIN_HPP

#include <array>
#include <complex>
#include <vector>

#include "chenlegendre/barword.hpp"
#include "chenlegendre/rational_function.hpp"

namespace chl {

/// Connection matrix of the Legendre family in the basis (theta0, theta1):
/// entry(i, j) is the coefficient of theta_i in d_lambda(theta_j), so a
/// period column p_i = int_sigma theta_i satisfies dp/dlambda = A^T p.
///
/// The entries are pinned by requiring that the hypergeometric period column
/// (Ktilde, Etilde) = pi*(2F1(1/2,1/2;1;lambda), 2F1(1/2,3/2;2;lambda))
/// solves that ODE; with denominator lambda*(1-lambda) and degree <= 1
/// numerators the solution is unique (re-derived exactly in the test suite):
///
///   d theta0 = [    theta0/2 - theta1/4 ] dlambda / (1-lambda)
///   d theta1 = [ theta0 - (1-lambda/2) theta1 ] dlambda / (lambda(1-lambda))
class GaussManinMatrix {
  public:
    GaussManinMatrix(RationalFunction e00, RationalFunction e01,
                     RationalFunction e10, RationalFunction e11);

    const RationalFunction& entry(int i, int j) const { return entries_[i][j]; }
    /// Numerator of entry(i,j) over the common denominator lambda*(1-lambda).
    const Polynomial& numerator(int i, int j) const { return numerators_[i][j]; }

    /// The matrix M(lambda) with dP/dlambda = M * P for period columns,
    /// i.e. A^T evaluated at lambda. Throws PoleError at lambda in {0,1}.
    std::array<std::array<std::complex<double>, 2>, 2>
    transport_matrix(std::complex<double> lambda) const;

    /// As above, with 1-lambda supplied by the caller; paths that hug the
    /// puncture at 1 pass the stably computed difference so the connection
    /// keeps full relative precision there.
    std::array<std::array<std::complex<double>, 2>, 2>
    transport_matrix(std::complex<double> lambda, std::complex<double> one_minus_lambda) const;

  private:
    RationalFunction entries_[2][2];
    Polynomial numerators_[2][2];
};

/// The hard-coded Legendre connection (see class comment).
const GaussManinMatrix& legendre_gauss_manin();

/// Covariant derivative of a symmetric-power monomial by the Leibniz rule,
/// expanded in the monomial basis: returns the pairs (monomial, coefficient)
/// of d_lambda(theta0^e0 theta1^e1). Constants map to an empty vector.
std::vector<std::pair<FiberMonomial, RationalFunction>>
gm_derivative(const FiberMonomial& m, const GaussManinMatrix& gm = legendre_gauss_manin());

} // namespace chl

#endif
