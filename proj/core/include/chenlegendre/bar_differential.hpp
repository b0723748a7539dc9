#ifndef CHENLEGENDRE_BAR_DIFFERENTIAL_HPP
#define CHENLEGENDRE_BAR_DIFFERENTIAL_HPP

#include "chenlegendre/barword.hpp"
#include "chenlegendre/gauss_manin.hpp"

namespace chl {

/// One term of the bar differential before exterior-algebra normalization: a
/// word in which a single slot carries a 2-form u ^ v with u = wedge_left *
/// dlambda and v = wedge_right * dlambda. The alternation (u^v = -(v^u))
/// evaluates the slot against dlambda ^ dlambda, whose coefficient
/// wl*wr - wr*wl is computed exactly rather than asserted to vanish.
struct BarDegreeOneTerm {
    SlotSeq left;              // slots before the 2-form slot
    FiberMonomial etas;        // fiber content of the 2-form slot
    RationalFunction wedge_left;
    RationalFunction wedge_right;
    SlotSeq right;             // slots after the 2-form slot
    GaussianRational coeff;
    int sign;                  // (-1)^(nu+1) from the bar differential

    /// Alternating coefficient of the slot's 2-form against dlambda^dlambda.
    RationalFunction alternated() const;
};

struct BarDifferentialResult {
    /// Terms produced by the two sums of the differential, prior to applying
    /// the exterior rule on the one-dimensional base.
    std::vector<BarDegreeOneTerm> raw_terms;
    std::size_t raw_term_count() const { return raw_terms.size(); }
    /// True when every raw term's alternated 2-form coefficient is exactly
    /// zero (which on a curve is an identity, observed here by computation).
    bool is_zero() const;
};

/// Bar differential on degree-zero words. Both sums are computed: the slotwise
/// derivative d(eta; omega) = [Leibniz eta-terms; dlambda ^ omega] + [eta; d omega]
/// and the adjacent wedges [.. | a_i ^ a_(i+1) | ..].
BarDifferentialResult bar_differential(const BarWord& w,
                                       const GaussManinMatrix& gm = legendre_gauss_manin());

/// Coefficient function of a base form against dlambda: chi0 -> 1/lambda,
/// chi1 -> 1/(1-lambda), as exact rational functions.
RationalFunction base_form_ratfun(BaseForm f);

} // namespace chl

#endif
