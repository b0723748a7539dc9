#include "chenlegendre/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>

#include <nlohmann/json.hpp>

#include "chenlegendre/json_util.hpp"
#include "chenlegendre/ode.hpp"
#include "chenlegendre/transport.hpp"

namespace chl {

namespace {

constexpr double kSingularGuard = 1e-13;

struct SlotWeight {
    std::vector<int> eta_rows;   // 0 for theta0 factors, 1 for theta1 factors
    std::vector<int> sigma_cols; // 0 for alpha factors, 1 for beta factors
    double inv_factorial = 1.0;

    // Symmetrized pairing of the fiber monomial against the cycle tuple:
    // (1/k!) sum over permutations of the matched period products.
    Cplx eval(const Cplx frame[2][2]) const {
        const std::size_t k = eta_rows.size();
        if (k == 0) return 1.0;
        if (k == 1) return frame[eta_rows[0]][sigma_cols[0]];
        std::vector<int> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        Cplx sum = 0.0;
        do {
            Cplx prod = 1.0;
            for (std::size_t j = 0; j < k; ++j)
                prod *= frame[eta_rows[j]][sigma_cols[static_cast<std::size_t>(idx[j])]];
            sum += prod;
        } while (std::next_permutation(idx.begin(), idx.end()));
        return sum * inv_factorial;
    }
};

struct TermPlan {
    std::vector<BaseForm> forms;
    std::vector<SlotWeight> weights;
    int total_sym = 0;
    std::size_t size() const { return forms.size(); }
};

void check_arity(const SlotSeq& seq, const std::vector<CycleSlot>& cycle_slots) {
    if (seq.size() != cycle_slots.size())
        throw ArityError("cycle word length " + std::to_string(cycle_slots.size()) +
                         " does not match bar word length " + std::to_string(seq.size()));
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].etas.degree() != cycle_slots[i].arity())
            throw ArityError("slot " + std::to_string(i) + " pairs a degree-" +
                             std::to_string(seq[i].etas.degree()) +
                             " monomial with a tuple of arity " +
                             std::to_string(cycle_slots[i].arity()));
    }
}

TermPlan make_plan(const SlotSeq& seq, const std::vector<CycleSlot>& cycle_slots) {
    TermPlan plan;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const Slot& s = seq[i];
        SlotWeight w;
        for (int k = 0; k < s.etas.e0; ++k) w.eta_rows.push_back(0);
        for (int k = 0; k < s.etas.e1; ++k) w.eta_rows.push_back(1);
        for (CycleBasis b : cycle_slots[i].factors)
            w.sigma_cols.push_back(b == CycleBasis::alpha ? 0 : 1);
        double fact = 1.0;
        for (std::size_t k = 2; k <= w.eta_rows.size(); ++k) fact *= static_cast<double>(k);
        w.inv_factorial = 1.0 / fact;
        plan.weights.push_back(std::move(w));
        plan.forms.push_back(s.omega);
        plan.total_sym += s.etas.degree();
    }
    return plan;
}

// Joint right-hand side: state = [frame (4, row-major) | I_1..I_r].
OdeRhs joint_rhs(const Path& path, const TermPlan& plan) {
    return [&path, &plan](double t, const OdeState& y, OdeState& dy) {
        Cplx lambda = path.point(t);
        Cplx om = path.one_minus_point(t);
        if (std::abs(lambda) < kSingularGuard || std::abs(om) < kSingularGuard)
            throw SingularityError("pairing path touches a singular fiber", t);
        Cplx vel = path.velocity(t);
        auto m = legendre_gauss_manin().transport_matrix(lambda, om);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                dy[static_cast<std::size_t>(2 * i + j)] =
                    (m[i][0] * y[static_cast<std::size_t>(j)] +
                     m[i][1] * y[static_cast<std::size_t>(2 + j)]) *
                    vel;
        Cplx frame[2][2] = {{y[0], y[1]}, {y[2], y[3]}};
        const std::size_t r = plan.size();
        for (std::size_t i = 0; i < r; ++i) {
            Cplx w = plan.weights[i].eval(frame);
            Cplx base = plan.forms[i] == BaseForm::chi0 ? 1.0 / lambda : 1.0 / om;
            Cplx prev = i == 0 ? Cplx(1.0) : y[4 + i - 1];
            dy[4 + i] = w * base * vel * prev;
        }
    };
}

OdeRhs frame_only_rhs(const Path& path) {
    return [&path](double t, const OdeState& y, OdeState& dy) {
        Cplx lambda = path.point(t);
        Cplx om = path.one_minus_point(t);
        if (std::abs(lambda) < kSingularGuard || std::abs(om) < kSingularGuard)
            throw SingularityError("pairing path touches a singular fiber", t);
        Cplx vel = path.velocity(t);
        auto m = legendre_gauss_manin().transport_matrix(lambda, om);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                dy[static_cast<std::size_t>(2 * i + j)] =
                    (m[i][0] * y[static_cast<std::size_t>(j)] +
                     m[i][1] * y[static_cast<std::size_t>(2 + j)]) *
                    vel;
    };
}

void integrate_piecewise(const OdeRhs& rhs, const Path& path, double t0, double t1, OdeState& y,
                         const OdeOptions& opts) {
    double prev = t0;
    auto joints = path.joint_parameters();
    if (t1 < t0) std::reverse(joints.begin(), joints.end());
    for (double joint : joints) {
        bool inside = t1 > t0 ? (joint > t0 && joint < t1) : (joint < t0 && joint > t1);
        if (!inside) continue;
        ode_integrate(rhs, prev, joint, y, opts);
        prev = joint;
    }
    ode_integrate(rhs, prev, t1, y, opts);
}

using Frame4 = std::array<Cplx, 4>;

// Reference frame transported to a target point through a straight connector.
Frame4 anchored_frame(Cplx target, double ode_tol) {
    PeriodFrame ref = reference_frame(ode_tol);
    PeriodFrame anchored = ref;
    if (std::abs(target - ref.basepoint) > 1e-14)
        anchored = gm_transport(Path::line(ref.basepoint, target), ref, ode_tol);
    return {anchored.m[0][0], anchored.m[0][1], anchored.m[1][0], anchored.m[1][1]};
}

// Frame values along a path, pinned to `anchor` at parameter 1 and pulled
// backward to each requested parameter (strictly decreasing stops).
std::vector<Frame4> backward_frames(const Path& path, const Frame4& anchor,
                                    const std::vector<double>& stops, double ode_tol) {
    OdeState y(anchor.begin(), anchor.end());
    OdeOptions opts;
    opts.rtol = ode_tol;
    opts.atol = ode_tol;
    OdeRhs rhs = frame_only_rhs(path);
    std::vector<Frame4> frames;
    double prev = 1.0;
    for (double stop : stops) {
        if (stop > prev) throw DomainError("internal: frame stops must decrease");
        if (stop < prev) integrate_piecewise(rhs, path, prev, stop, y, opts);
        frames.push_back({y[0], y[1], y[2], y[3]});
        prev = stop;
    }
    return frames;
}

// Log-divergence bound of a one-sided factor at its start puncture: one log
// per form singular there plus one per period factor whose weight is
// logarithmic there. Periods against alpha lifts grow like log(1-lambda)
// (at lambda = 1), periods against beta lifts like log(lambda) (at 0); the
// count is an upper bound, and the fit residual gate catches the cases the
// regularization genuinely cannot represent (e.g. the theta1/beta pole).
struct OneSidedDegrees {
    int fit = 0;  // log degree of the limit polynomial
    int corr = 0; // log degree of the eps^p boundary corrections
};

OneSidedDegrees one_sided_degrees(const Path& factor, const TermPlan& plan) {
    Cplx s = factor.start();
    bool at_zero = std::abs(s) < std::abs(s - 1.0);
    BaseForm divergent = at_zero ? BaseForm::chi0 : BaseForm::chi1;
    // Inner integrals vanish at the start, so only the leading run of
    // divergent forms produces log powers in the limit polynomial; weight
    // logs (alpha periods grow like log at lambda = 1, beta periods at 0)
    // raise it wherever they sit.
    int run = 0;
    for (BaseForm f : plan.forms) {
        if (f != divergent) break;
        ++run;
    }
    int logs = 0;
    for (const SlotWeight& w : plan.weights)
        for (int col : w.sigma_cols)
            if ((at_zero && col == 1) || (!at_zero && col == 0)) ++logs;
    // The eps-cut of any convergent prefix still walks through every later
    // divergent integration, so the boundary corrections can carry one log
    // per divergent form anywhere in the word (plus the weight logs).
    int divergent_total = 0;
    for (BaseForm f : plan.forms)
        if (f == divergent) ++divergent_total;
    OneSidedDegrees d;
    d.fit = run + logs;
    d.corr = divergent_total + logs + 1;
    return d;
}

// <slots, cycles (x) factor> for a factor path whose parameter-1 end carries
// the anchored frame. cusp_at_start selects the one-sided regularized route;
// cut_scale maps the outer shrink parameter eps to this factor's parameter.
Cplx factor_value(const Path& factor, const Frame4& anchor, const SlotSeq& seq,
                  const std::vector<CycleSlot>& cycle_slots, bool cusp_at_start,
                  double cut_scale, const PairOptions& opts) {
    if (seq.empty()) return 1.0;
    TermPlan plan = make_plan(seq, cycle_slots);
    const std::size_t r = plan.size();
    OdeOptions ode_opts;
    ode_opts.rtol = opts.ode_tol;
    ode_opts.atol = opts.ode_tol;
    OdeRhs rhs = joint_rhs(factor, plan);

    if (!cusp_at_start) {
        Frame4 g0 = backward_frames(factor, anchor, {0.0}, opts.ode_tol).front();
        OdeState y(4 + r, 0.0);
        for (int k = 0; k < 4; ++k) y[static_cast<std::size_t>(k)] = g0[static_cast<std::size_t>(k)];
        integrate_piecewise(rhs, factor, 0.0, 1.0, y, ode_opts);
        return y[4 + r - 1];
    }

    OneSidedDegrees degs = one_sided_degrees(factor, plan);
    int degree = degs.fit;
    int corr_degree = degs.corr;
    std::vector<double> eps = reg_epsilons(degree, corr_degree, opts.reglim_j0, opts.reglim_j1);
    std::vector<double> starts;
    starts.reserve(eps.size());
    for (double e : eps) starts.push_back(cut_scale * e);
    std::vector<Frame4> frames = backward_frames(factor, anchor, starts, opts.ode_tol);

    std::vector<Cplx> samples;
    samples.reserve(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) {
        OdeState y(4 + r, 0.0);
        for (int k = 0; k < 4; ++k)
            y[static_cast<std::size_t>(k)] = frames[i][static_cast<std::size_t>(k)];
        integrate_piecewise(rhs, factor, starts[i], 1.0, y, ode_opts);
        samples.push_back(y[4 + r - 1]);
        if (std::getenv("CHL_REG_DEBUG"))
            std::fprintf(stderr, "factor sample eps=%.17g value=%.17g %+.3gi\n", eps[i],
                         samples.back().real(), samples.back().imag());
    }
    // The fit runs in log(eps) of the original shrink family, shared by both
    // halves of the split so the constant terms multiply.
    RegFitResult fit = regularized_fit(eps, samples, degree, corr_degree, opts.tol);
    return fit.value;
}

// Value of one bar-word term against one cycle term along one path.
Cplx pair_term(const Path& path, const SlotSeq& seq, const std::vector<CycleSlot>& cycle_slots,
               const PairOptions& opts) {
    check_arity(seq, cycle_slots);
    if (seq.empty()) return 1.0; // <[], [] (x) gamma> = 1 for any gamma
    const std::size_t r = seq.size();

    if (!path.cuspidal()) {
        TermPlan plan = make_plan(seq, cycle_slots);
        OdeOptions ode_opts;
        ode_opts.rtol = opts.ode_tol;
        ode_opts.atol = opts.ode_tol;
        OdeRhs rhs = joint_rhs(path, plan);
        Frame4 anchor = anchored_frame(path.end(), opts.ode_tol);
        Frame4 g0 = backward_frames(path, anchor, {0.0}, opts.ode_tol).front();
        OdeState y(4 + r, 0.0);
        for (int k = 0; k < 4; ++k) y[static_cast<std::size_t>(k)] = g0[static_cast<std::size_t>(k)];
        integrate_piecewise(rhs, path, 0.0, 1.0, y, ode_opts);
        return y[4 + r - 1];
    }

    // Cuspidal path: split at the midpoint and expand through the
    // composition law; each half sees one singular end at its parameter-0
    // side, where the shrink cut keeps full relative precision. The end half
    // is traversed reversed (reversal rule: (-1)^k and reversed slots) so the
    // puncture at 1 is approached through stably represented segments. One
    // reference transport to gamma(1/2) pins the lift for every shrink level
    // of both halves.
    Path first = path.subpath(0.0, 0.5);
    Path second_rev = path.subpath(0.5, 1.0).reversed();
    Frame4 anchor = anchored_frame(path.point(0.5), opts.ode_tol);

    Cplx total = 0.0;
    for (std::size_t cut = 0; cut <= r; ++cut) {
        SlotSeq head(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cut));
        std::vector<CycleSlot> chead(cycle_slots.begin(),
                                     cycle_slots.begin() + static_cast<std::ptrdiff_t>(cut));
        SlotSeq tail_rev(seq.rbegin(), seq.rend() - static_cast<std::ptrdiff_t>(cut));
        std::vector<CycleSlot> ctail_rev(cycle_slots.rbegin(),
                                         cycle_slots.rend() - static_cast<std::ptrdiff_t>(cut));
        Cplx head_value = factor_value(first, anchor, head, chead, path.cuspidal_start(),
                                       2.0, opts);
        if (head_value == Cplx(0.0)) continue;
        Cplx tail_value = factor_value(second_rev, anchor, tail_rev, ctail_rev,
                                       path.cuspidal_end(), 2.0, opts);
        if ((r - cut) % 2 == 1) tail_value = -tail_value;
        total += head_value * tail_value;
    }
    return total;
}

} // namespace

Cplx pair(const BarWord& w, const CycleWord& c, const Path& gamma, const PairOptions& opts) {
    Cplx total = 0.0;
    for (const auto& [seq, wc] : w.terms()) {
        for (const CycleTerm& ct : c.terms) {
            Cplx v = pair_term(gamma, seq, ct.slots, opts);
            total += wc.to_complex() * ct.coeff.to_complex() * v;
        }
    }
    return total;
}

namespace {

// <w-slots, c-slots (x) q_1...q_m> via the composition law: sum over
// consecutive splittings into m blocks of the product of factor pairings.
Cplx pair_path_word(const std::vector<Path>& factors, const SlotSeq& seq,
                    const std::vector<CycleSlot>& cycle_slots, const PairOptions& opts) {
    const std::size_t r = seq.size();
    if (factors.empty()) return r == 0 ? 1.0 : 0.0; // constant path
    if (factors.size() == 1) return pair_term(factors[0], seq, cycle_slots, opts);
    Cplx total = 0.0;
    std::vector<Path> rest(factors.begin() + 1, factors.end());
    for (std::size_t cut = 0; cut <= r; ++cut) {
        SlotSeq head(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cut));
        std::vector<CycleSlot> chead(cycle_slots.begin(),
                                     cycle_slots.begin() + static_cast<std::ptrdiff_t>(cut));
        SlotSeq tail(seq.begin() + static_cast<std::ptrdiff_t>(cut), seq.end());
        std::vector<CycleSlot> ctail(cycle_slots.begin() + static_cast<std::ptrdiff_t>(cut),
                                     cycle_slots.end());
        Cplx head_value = pair_term(factors[0], head, chead, opts);
        if (head_value == Cplx(0.0)) continue;
        total += head_value * pair_path_word(rest, tail, ctail, opts);
    }
    return total;
}

} // namespace

Cplx pair(const BarWord& w, const CycleWord& c, const FormalPathCombination& comb,
          const PairOptions& opts) {
    Cplx total = 0.0;
    for (const auto& [wseq, wc] : w.terms()) {
        for (const CycleTerm& ct : c.terms) {
            if (wseq.size() != ct.slots.size())
                throw ArityError("cycle word length does not match bar word length");
            Cplx inner = 0.0;
            for (const auto& [coeff, word] : comb.terms)
                inner += coeff.to_double() * pair_path_word(word.factors, wseq, ct.slots, opts);
            total += wc.to_complex() * ct.coeff.to_complex() * inner;
        }
    }
    return total;
}

namespace {

const SlotSeq& single_term(const BarWord& w, const char* what) {
    if (w.terms().size() != 1)
        throw DomainError(std::string(what) + " needs a single-term bar word");
    return w.terms().begin()->first;
}

const CycleTerm& single_term(const CycleWord& c, const char* what) {
    if (c.terms.size() != 1)
        throw DomainError(std::string(what) + " needs a single-term cycle word");
    return c.terms.front();
}

void enumerate_shuffles(std::size_t r, std::size_t s,
                        const std::function<void(const std::vector<int>&)>& emit) {
    // sources[k] = 0 if position k takes the next letter of the first word.
    std::vector<int> sources;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == r && j == s) {
            emit(sources);
            return;
        }
        if (i < r) {
            sources.push_back(0);
            rec(i + 1, j);
            sources.pop_back();
        }
        if (j < s) {
            sources.push_back(1);
            rec(i, j + 1);
            sources.pop_back();
        }
    };
    rec(0, 0);
}

} // namespace

ShuffleRelReport verify_shuffle_rel(const BarWord& w1, const BarWord& w2, const CycleWord& c1,
                                    const CycleWord& c2, double tol, const PairOptions& opts) {
    const SlotSeq& s1 = single_term(w1, "verify_shuffle_rel");
    const SlotSeq& s2 = single_term(w2, "verify_shuffle_rel");
    const CycleTerm& t1 = single_term(c1, "verify_shuffle_rel");
    const CycleTerm& t2 = single_term(c2, "verify_shuffle_rel");
    GaussianRational coeff = w1.terms().begin()->second * w2.terms().begin()->second *
                             t1.coeff * t2.coeff;

    Path dch = Path::dch();
    ShuffleRelReport rep;
    rep.tol = tol;
    rep.lhs = pair(w1, c1, dch, opts) * pair(w2, c2, dch, opts);

    Cplx rhs = 0.0;
    enumerate_shuffles(s1.size(), s2.size(), [&](const std::vector<int>& sources) {
        SlotSeq seq;
        std::vector<CycleSlot> cyc;
        std::size_t i = 0, j = 0;
        for (int src : sources) {
            if (src == 0) {
                seq.push_back(s1[i]);
                cyc.push_back(t1.slots[i]);
                ++i;
            } else {
                seq.push_back(s2[j]);
                cyc.push_back(t2.slots[j]);
                ++j;
            }
        }
        rhs += pair_term(dch, seq, cyc, opts);
    });
    rep.rhs = coeff.to_complex() * rhs;
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    rep.pass = rep.abs_err < tol;
    return rep;
}

DualRelReport verify_dual_rel(const BarWord& w, const CycleWord& c, double tol,
                              bool substitute_forms, const PairOptions& opts) {
    Path dch = Path::dch();
    DualRelReport rep;
    rep.tol = tol;
    rep.substitute_forms = substitute_forms;
    rep.lhs = pair(w, c, dch, opts);

    // Reversed word, optionally with chi0 <-> chi1 swapped.
    BarWord rev;
    for (const auto& [seq, coeff] : w.terms()) {
        SlotSeq rseq(seq.rbegin(), seq.rend());
        if (substitute_forms)
            for (Slot& s : rseq)
                s.omega = s.omega == BaseForm::chi0 ? BaseForm::chi1 : BaseForm::chi0;
        rev.add_term(rseq, coeff);
    }
    // Reversed primed cycle word: alpha' = -i beta, beta' = i alpha.
    CycleWord primed;
    for (const CycleTerm& t : c.terms) {
        CycleTerm pt;
        pt.coeff = t.coeff;
        for (auto it = t.slots.rbegin(); it != t.slots.rend(); ++it) {
            CycleSlot slot;
            for (CycleBasis b : it->factors) {
                if (b == CycleBasis::alpha) {
                    slot.factors.push_back(CycleBasis::beta);
                    pt.coeff *= -GaussianRational::i();
                } else {
                    slot.factors.push_back(CycleBasis::alpha);
                    pt.coeff *= GaussianRational::i();
                }
            }
            std::sort(slot.factors.begin(), slot.factors.end());
            pt.slots.push_back(std::move(slot));
        }
        primed.terms.push_back(std::move(pt));
    }
    rep.rhs = pair(rev, primed, dch, opts);
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    rep.pass = rep.abs_err < tol;
    return rep;
}

AugmentationReport verify_augmentation_vanishing(const BarWord& w, const CycleWord& c,
                                                 const FormalPathCombination& j_power,
                                                 double tol, const PairOptions& opts) {
    AugmentationReport rep;
    rep.tol = tol;
    rep.value = pair(w, c, j_power, opts);
    rep.abs_value = std::abs(rep.value);
    rep.pass = rep.abs_value < tol;
    return rep;
}

nlohmann::json shuffle_rel_to_json(const ShuffleRelReport& r) {
    return {{"lhs", complex_to_json(r.lhs)},
            {"rhs", complex_to_json(r.rhs)},
            {"abs_err", r.abs_err},
            {"tol", r.tol},
            {"pass", r.pass}};
}

nlohmann::json dual_rel_to_json(const DualRelReport& r) {
    return {{"lhs", complex_to_json(r.lhs)},
            {"rhs", complex_to_json(r.rhs)},
            {"abs_err", r.abs_err},
            {"tol", r.tol},
            {"substitute_forms", r.substitute_forms},
            {"pass", r.pass}};
}

nlohmann::json augmentation_to_json(const AugmentationReport& r) {
    return {{"value", complex_to_json(r.value)},
            {"abs_value", r.abs_value},
            {"tol", r.tol},
            {"pass", r.pass}};
}

} // namespace chl
