#ifndef CHENLEGENDRE_PAIRING_HPP
#define CHENLEGENDRE_PAIRING_HPP

#include <nlohmann/json_fwd.hpp>

#include "chenlegendre/barword.hpp"
#include "chenlegendre/cycleword.hpp"
#include "chenlegendre/path.hpp"
#include "chenlegendre/reglim.hpp"

namespace chl {

struct PairOptions {
    double tol = 1e-8;      // regularization residual gate is 10*tol
    double ode_tol = 1e-12;
    int reglim_j0 = 10;
    int reglim_j1 = 30;
};

/// The pairing <bar word, cycle word (x) path>: weights
/// w_i(t) = prod_j <period of eta_(i,j) against the lift of sigma_(i,j)>
/// are built from one joint Gauss-Manin transport along gamma, with the lift
/// normalized against the reference frame at the terminal end (t = 1 for
/// interior endpoints; the last interior sample of the shrink family for a
/// cuspidal end). Bilinear in the word and the cycle word; cuspidal paths are
/// evaluated through the regularized limit. Mixed fiber monomials pair with
/// mixed cycle tuples through the symmetrized product (the permanent divided
/// by arity factorial), which reduces to the plain product whenever the
/// factors repeat a single basis element.
Cplx pair(const BarWord& w, const CycleWord& c, const Path& gamma, const PairOptions& opts);

/// Bilinear extension over a formal combination of path words. A product
/// term q_1 ... q_m is evaluated through the composition law: the sum over
/// consecutive splittings w = w_1...w_m (cycle slots split alongside) of the
/// products of single-path pairings. For a single factor this is the plain
/// pairing; the expansion realizes <w, sigma (x) alpha gamma> =
/// sum <w1, sigma1 (x) alpha><w2, sigma2 (x) gamma> exactly, which is what
/// the vanishing of the pairing on powers of the augmentation ideal tests.
Cplx pair(const BarWord& w, const CycleWord& c, const FormalPathCombination& comb,
          const PairOptions& opts);

struct ShuffleRelReport {
    Cplx lhs;  // product of the two pairings
    Cplx rhs;  // sum over (r,s)-shuffles
    double abs_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Checks the shuffle relation of the pairing on dch: the product of two
/// pairings equals the sum over (r,s)-shuffles with word slots and cycle
/// slots permuted together. Inputs must be single-term words.
ShuffleRelReport verify_shuffle_rel(const BarWord& w1, const BarWord& w2, const CycleWord& c1,
                                    const CycleWord& c2, double tol, const PairOptions& opts);

struct DualRelReport {
    Cplx lhs;
    Cplx rhs;
    double abs_err = 0.0;
    double tol = 0.0;
    bool substitute_forms = false;
    bool pass = false;
};

/// Duality check on dch: left side pairs (w, c); right side pairs the
/// reversed word against the reversed primed cycle word (alpha' = -i beta,
/// beta' = i alpha), optionally with chi0 and chi1 swapped in the reversed
/// word (substitute_forms).
DualRelReport verify_dual_rel(const BarWord& w, const CycleWord& c, double tol,
                              bool substitute_forms, const PairOptions& opts);

struct AugmentationReport {
    Cplx value;
    double abs_value = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Evaluates the pairing against an expanded power of the augmentation ideal
/// and checks that it vanishes below tol.
AugmentationReport verify_augmentation_vanishing(const BarWord& w, const CycleWord& c,
                                                 const FormalPathCombination& j_power,
                                                 double tol, const PairOptions& opts);

nlohmann::json shuffle_rel_to_json(const ShuffleRelReport& r);
nlohmann::json dual_rel_to_json(const DualRelReport& r);
nlohmann::json augmentation_to_json(const AugmentationReport& r);

} // namespace chl

#endif
