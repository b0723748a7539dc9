#ifndef CHENLEGENDRE_MZV_HPP
#define CHENLEGENDRE_MZV_HPP

#include <vector>

#include "chenlegendre/barword.hpp"
#include "chenlegendre/reglim.hpp"

namespace chl {

struct MzvIndex {
    std::vector<int> k; // (k_1, ..., k_d)

    int weight() const;
    int depth() const { return static_cast<int>(k.size()); }
    bool is_convergent() const { return !k.empty() && k.back() >= 2; }
    std::string str() const;
};

/// zeta(k_1,...,k_d) = sum over 0 < n_1 < ... < n_d of prod n_i^(-k_i) by
/// nested summation: the outer index is summed directly and the tail beyond
/// the truncation point is corrected by an Euler-Maclaurin evaluation of a
/// log-polynomial model of the inner sums. Absolute error below tol (checked
/// against a half-depth evaluation; the truncation grows as needed).
/// Divergent indices (k_d = 1) raise DomainError.
double mzv_series(const MzvIndex& idx, double tol);

/// The plain-form bar word chi1 chi0^(k_1-1) ... chi1 chi0^(k_d-1).
BarWord mzv_word(const MzvIndex& idx, const BarAlgebra& alg);

/// The same letters as a form list (for integration).
std::vector<WeightedForm> mzv_forms(const MzvIndex& idx);

/// Regularized iterated integral of the word over dch.
double mzv_iterint(const MzvIndex& idx, double tol, double ode_tol, int j0, int j1);

/// All convergent indices of the given weight (compositions with last >= 2).
std::vector<MzvIndex> convergent_indices_of_weight(int weight);

} // namespace chl

#endif
