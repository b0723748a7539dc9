#ifndef CHENLEGENDRE_BARWORD_HPP
#define CHENLEGENDRE_BARWORD_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chenlegendre/gaussian_rational.hpp"

namespace chl {

/// Basis 1-forms on the base: chi0 = dlambda/lambda, chi1 = dlambda/(1-lambda).
enum class BaseForm { chi0, chi1 };

const char* base_form_name(BaseForm f);
BaseForm base_form_from_name(const std::string& name);

/// Monomial theta0^e0 * theta1^e1 in the symmetric algebra of the fiber
/// cohomology basis. The tuple of eta factors in a slot is stored as this
/// single product; the pairing only consumes the product of the periods, so
/// factor order is not represented.
struct FiberMonomial {
    int e0 = 0;
    int e1 = 0;
    int degree() const { return e0 + e1; }
    friend auto operator<=>(const FiberMonomial&, const FiberMonomial&) = default;
};

struct Slot {
    FiberMonomial etas;
    BaseForm omega = BaseForm::chi0;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

using SlotSeq = std::vector<Slot>;

/// Q(i)-linear combination of slot sequences. No zero coefficients stored;
/// the empty sequence is the unit word [].
class BarWord {
  public:
    BarWord() = default;
    explicit BarWord(SlotSeq seq, GaussianRational coeff = GaussianRational(1));

    static BarWord unit() { return BarWord(SlotSeq{}); }

    const std::map<SlotSeq, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Maximum slot-sequence length over stored terms (0 for the zero word).
    int length() const;

    void add_term(const SlotSeq& seq, const GaussianRational& coeff);

    BarWord operator-() const;
    BarWord& operator+=(const BarWord& o);
    BarWord& operator-=(const BarWord& o);
    BarWord& operator*=(const GaussianRational& s);
    friend BarWord operator+(BarWord a, const BarWord& b) { return a += b; }
    friend BarWord operator-(BarWord a, const BarWord& b) { return a -= b; }
    friend BarWord operator*(BarWord a, const GaussianRational& s) { return a *= s; }
    friend bool operator==(const BarWord& a, const BarWord& b) { return a.terms_ == b.terms_; }

    std::string str() const;

  private:
    std::map<SlotSeq, GaussianRational> terms_;
};

/// Formal sum of two-sided tensors of slot sequences (the coproduct target).
class TensorCombination {
  public:
    using Key = std::pair<SlotSeq, SlotSeq>;

    const std::map<Key, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Key& key, const GaussianRational& coeff);

    TensorCombination& operator+=(const TensorCombination& o);
    TensorCombination& operator-=(const TensorCombination& o);
    friend TensorCombination operator+(TensorCombination a, const TensorCombination& b) { return a += b; }
    friend TensorCombination operator-(TensorCombination a, const TensorCombination& b) { return a -= b; }
    friend bool operator==(const TensorCombination& a, const TensorCombination& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<Key, GaussianRational> terms_;
};

/// Context for the bar-word Hopf operations: carries the symmetric-power
/// cutoff M and the length cutoff N (membership in L^{-N}).
class BarAlgebra {
  public:
    BarAlgebra(int sym_cutoff, int length_cutoff);

    int sym_cutoff() const { return sym_cutoff_; }
    int length_cutoff() const { return length_cutoff_; }

    void validate_slot(const Slot& slot) const;
    void validate_sequence(const SlotSeq& seq) const;
    BarWord word(SlotSeq seq, GaussianRational coeff = GaussianRational(1)) const;

    /// Shuffle product. All Koszul signs are +1: every slot carries one base
    /// 1-form, so its bar degree nu = p - 1 vanishes and reordering
    /// degree-zero letters produces no sign. Computed through the general
    /// signed merge so the collapse is observable rather than assumed.
    BarWord shuffle(const BarWord& u, const BarWord& v) const;

    /// Deconcatenation coproduct: all cuts of every term.
    TensorCombination coproduct(const BarWord& w) const;

    /// Antipode: reversal with sign (-1)^r; the Koszul factor eps(tau_r) is
    /// +1 in bar degree zero (same parity argument as the shuffle).
    BarWord antipode(const BarWord& w) const;

    /// Coefficient of the empty word.
    GaussianRational counit(const BarWord& w) const;

    /// Componentwise shuffle of tensors: (a (x) b) shuffle (c (x) d)
    /// = (a shuffle c) (x) (b shuffle d).
    TensorCombination shuffle_tensor(const TensorCombination& x, const TensorCombination& y) const;

  private:
    int sym_cutoff_;
    int length_cutoff_;
};

nlohmann::json barword_to_json(const BarWord& w);
BarWord barword_from_json(const nlohmann::json& j, const BarAlgebra& alg);

} // namespace chl

#endif
