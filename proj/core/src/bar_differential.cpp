#include "chenlegendre/bar_differential.hpp"

namespace chl {

RationalFunction base_form_ratfun(BaseForm f) {
    Polynomial one(GaussianRational(1));
    Polynomial lam = Polynomial::lambda();
    if (f == BaseForm::chi0) return {one, lam};
    return {one, one - lam};
}

RationalFunction BarDegreeOneTerm::alternated() const {
    return wedge_left * wedge_right - wedge_right * wedge_left;
}

bool BarDifferentialResult::is_zero() const {
    for (const auto& t : raw_terms)
        if (!t.alternated().is_zero()) return false;
    return true;
}

BarDifferentialResult bar_differential(const BarWord& w, const GaussManinMatrix& gm) {
    BarDifferentialResult result;
    RationalFunction one(GaussianRational(1));
    for (const auto& [seq, c] : w.terms()) {
        const int r = static_cast<int>(seq.size());
        // First sum: differentiate each slot. nu_(i-1) = 0 for every i (each
        // slot has one base 1-form), so the sign is always (-1)^(0+1) = -1.
        for (int i = 0; i < r; ++i) {
            const Slot& slot = seq[static_cast<std::size_t>(i)];
            SlotSeq left(seq.begin(), seq.begin() + i);
            SlotSeq right(seq.begin() + i + 1, seq.end());
            RationalFunction omega = base_form_ratfun(slot.omega);
            // Gauss-Manin part: [.. ; (d_lambda eta) dlambda ^ omega_i ..]
            for (auto& [mono, coeff] : gm_derivative(slot.etas, gm)) {
                BarDegreeOneTerm term;
                term.left = left;
                term.etas = mono;
                term.wedge_left = coeff;   // coeff * dlambda
                term.wedge_right = omega;  // omega = f * dlambda
                term.right = right;
                term.coeff = c;
                term.sign = -1;
                result.raw_terms.push_back(std::move(term));
            }
            // d(omega_i) = f' dlambda ^ dlambda.
            BarDegreeOneTerm dw;
            dw.left = left;
            dw.etas = slot.etas;
            dw.wedge_left = omega.derivative();
            dw.wedge_right = one;
            dw.right = right;
            dw.coeff = c;
            dw.sign = -1;
            result.raw_terms.push_back(std::move(dw));
        }
        // Second sum: wedge adjacent slots; again nu_i = 0 and the sign is -1.
        for (int i = 0; i + 1 < r; ++i) {
            const Slot& a = seq[static_cast<std::size_t>(i)];
            const Slot& b = seq[static_cast<std::size_t>(i) + 1];
            BarDegreeOneTerm term;
            term.left = SlotSeq(seq.begin(), seq.begin() + i);
            term.etas = FiberMonomial{a.etas.e0 + b.etas.e0, a.etas.e1 + b.etas.e1};
            term.wedge_left = base_form_ratfun(a.omega);
            term.wedge_right = base_form_ratfun(b.omega);
            term.right = SlotSeq(seq.begin() + i + 2, seq.end());
            term.coeff = c;
            term.sign = -1;
            result.raw_terms.push_back(std::move(term));
        }
    }
    return result;
}

} // namespace chl
