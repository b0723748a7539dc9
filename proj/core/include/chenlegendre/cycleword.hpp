#ifndef CHENLEGENDRE_CYCLEWORD_HPP
#define CHENLEGENDRE_CYCLEWORD_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chenlegendre/gaussian_rational.hpp"
#include "chenlegendre/path.hpp"

namespace chl {

/// Basis homology classes of a smooth fiber.
enum class CycleBasis { alpha, beta };

const char* cycle_basis_name(CycleBasis c);
CycleBasis cycle_basis_from_name(const std::string& name);

/// One tensor slot: the tuple sigma_i of cycle factors, stored as a multiset
/// (the symmetric power does not order factors).
struct CycleSlot {
    std::vector<CycleBasis> factors; // kept sorted
    int arity() const { return static_cast<int>(factors.size()); }
};

struct CycleTerm {
    GaussianRational coeff{1};
    std::vector<CycleSlot> slots;
};

/// Formal Q(i)-combination of cycle tensors [sigma_1|...|sigma_r].
struct CycleWord {
    std::vector<CycleTerm> terms;

    static CycleWord single(std::vector<CycleSlot> slots,
                            GaussianRational coeff = GaussianRational(1));
    /// Empty tensor (length 0) with coefficient 1.
    static CycleWord unit() { return single({}); }
};

nlohmann::json cycleword_to_json(const CycleWord& w);
CycleWord cycleword_from_json(const nlohmann::json& j);

/// Element of the rational group algebra of paths, represented as composable
/// path words over a fixed generating set: each term is an ordered list of
/// factor paths sharing the common basepoint (the empty list is the constant
/// path). Keeping the factors separate lets the pairing expand over products
/// through its composition law.
struct PathWord {
    std::vector<Path> factors;
};

struct FormalPathCombination {
    Cplx basepoint{};
    std::vector<std::pair<Rational, PathWord>> terms;
};

/// Expands prod_i (loop_i - 1) into a formal path combination based at the
/// loops' common basepoint.
FormalPathCombination augmentation_power(const std::vector<Path>& loops);

} // namespace chl

#endif
