#include "chenlegendre/barword.hpp"

#include <functional>

#include <nlohmann/json.hpp>

#include "chenlegendre/errors.hpp"

namespace chl {

const char* base_form_name(BaseForm f) {
    return f == BaseForm::chi0 ? "chi0" : "chi1";
}

BaseForm base_form_from_name(const std::string& name) {
    if (name == "chi0") return BaseForm::chi0;
    if (name == "chi1") return BaseForm::chi1;
    throw ParseError("unknown base form '" + name + "'");
}

BarWord::BarWord(SlotSeq seq, GaussianRational coeff) {
    add_term(seq, coeff);
}

int BarWord::length() const {
    std::size_t n = 0;
    for (const auto& [seq, c] : terms_) n = std::max(n, seq.size());
    return static_cast<int>(n);
}

void BarWord::add_term(const SlotSeq& seq, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(seq);
    if (it == terms_.end()) {
        terms_.emplace(seq, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

BarWord BarWord::operator-() const {
    BarWord r;
    for (const auto& [seq, c] : terms_) r.terms_.emplace(seq, -c);
    return r;
}

BarWord& BarWord::operator+=(const BarWord& o) {
    for (const auto& [seq, c] : o.terms_) add_term(seq, c);
    return *this;
}

BarWord& BarWord::operator-=(const BarWord& o) {
    for (const auto& [seq, c] : o.terms_) add_term(seq, -c);
    return *this;
}

BarWord& BarWord::operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
        *this = BarWord();
        return *this;
    }
    for (auto& [seq, c] : terms_) c *= s;
    return *this;
}

std::string BarWord::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [seq, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")*[";
        for (std::size_t k = 0; k < seq.size(); ++k) {
            if (k) out += "|";
            const Slot& s = seq[k];
            for (int i = 0; i < s.etas.e0; ++i) out += "theta0.";
            for (int i = 0; i < s.etas.e1; ++i) out += "theta1.";
            out += ";";
            out += base_form_name(s.omega);
        }
        out += "]";
    }
    return out;
}

void TensorCombination::add_term(const Key& key, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

TensorCombination& TensorCombination::operator+=(const TensorCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorCombination& TensorCombination::operator-=(const TensorCombination& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

BarAlgebra::BarAlgebra(int sym_cutoff, int length_cutoff)
    : sym_cutoff_(sym_cutoff), length_cutoff_(length_cutoff) {
    if (sym_cutoff < 0 || length_cutoff < 0)
        throw DomainError("bar algebra cutoffs must be nonnegative");
}

void BarAlgebra::validate_slot(const Slot& slot) const {
    if (slot.etas.e0 < 0 || slot.etas.e1 < 0)
        throw DomainError("negative exponent in fiber monomial");
    if (slot.etas.degree() > sym_cutoff_)
        throw FiltrationError("fiber monomial exceeds the Sym cutoff M=" +
                              std::to_string(sym_cutoff_));
}

void BarAlgebra::validate_sequence(const SlotSeq& seq) const {
    if (static_cast<int>(seq.size()) > length_cutoff_)
        throw FiltrationError("word length " + std::to_string(seq.size()) +
                              " exceeds the length cutoff N=" + std::to_string(length_cutoff_));
    for (const Slot& s : seq) validate_slot(s);
}

BarWord BarAlgebra::word(SlotSeq seq, GaussianRational coeff) const {
    validate_sequence(seq);
    return BarWord(std::move(seq), std::move(coeff));
}

namespace {

// Degree of a slot in the nu-grading of the bar complex: one base 1-form per
// slot, so p = 1 and the shifted degree p - 1 is zero for every slot.
int slot_bar_degree(const Slot&) { return 0; }

void merge_shuffles(const SlotSeq& a, const SlotSeq& b, std::size_t i, std::size_t j,
                    SlotSeq& current, int sign,
                    const std::function<void(const SlotSeq&, int)>& emit) {
    if (i == a.size() && j == b.size()) {
        emit(current, sign);
        return;
    }
    if (i < a.size()) {
        current.push_back(a[i]);
        merge_shuffles(a, b, i + 1, j, current, sign, emit);
        current.pop_back();
    }
    if (j < b.size()) {
        // Taking the next letter of b past the remaining letters of a swaps it
        // with each of them; the Koszul sign is the product of (-1)^(da*db)
        // over those swaps. All slot degrees vanish here, so sign stays +1.
        int db = slot_bar_degree(b[j]);
        int swap_sign = 1;
        for (std::size_t k = i; k < a.size(); ++k) {
            if ((slot_bar_degree(a[k]) & 1) && (db & 1)) swap_sign = -swap_sign;
        }
        current.push_back(b[j]);
        merge_shuffles(a, b, i, j + 1, current, sign * swap_sign, emit);
        current.pop_back();
    }
}

} // namespace

BarWord BarAlgebra::shuffle(const BarWord& u, const BarWord& v) const {
    BarWord result;
    for (const auto& [us, uc] : u.terms()) {
        for (const auto& [vs, vc] : v.terms()) {
            if (static_cast<int>(us.size() + vs.size()) > length_cutoff_)
                throw FiltrationError(
                    "shuffle of lengths " + std::to_string(us.size()) + " and " +
                    std::to_string(vs.size()) + " exceeds the length cutoff N=" +
                    std::to_string(length_cutoff_));
            GaussianRational c = uc * vc;
            SlotSeq current;
            current.reserve(us.size() + vs.size());
            merge_shuffles(us, vs, 0, 0, current, 1,
                           [&](const SlotSeq& seq, int sign) {
                               result.add_term(seq, sign < 0 ? -c : c);
                           });
        }
    }
    return result;
}

TensorCombination BarAlgebra::coproduct(const BarWord& w) const {
    TensorCombination result;
    for (const auto& [seq, c] : w.terms()) {
        for (std::size_t cut = 0; cut <= seq.size(); ++cut) {
            SlotSeq left(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(cut));
            SlotSeq right(seq.begin() + static_cast<std::ptrdiff_t>(cut), seq.end());
            result.add_term({std::move(left), std::move(right)}, c);
        }
    }
    return result;
}

BarWord BarAlgebra::antipode(const BarWord& w) const {
    BarWord result;
    for (const auto& [seq, c] : w.terms()) {
        SlotSeq rev(seq.rbegin(), seq.rend());
        bool negate = (seq.size() % 2) != 0;
        result.add_term(rev, negate ? -c : c);
    }
    return result;
}

GaussianRational BarAlgebra::counit(const BarWord& w) const {
    auto it = w.terms().find(SlotSeq{});
    return it == w.terms().end() ? GaussianRational() : it->second;
}

TensorCombination BarAlgebra::shuffle_tensor(const TensorCombination& x,
                                             const TensorCombination& y) const {
    TensorCombination result;
    for (const auto& [xk, xc] : x.terms()) {
        for (const auto& [yk, yc] : y.terms()) {
            BarWord left = shuffle(BarWord(xk.first), BarWord(yk.first));
            BarWord right = shuffle(BarWord(xk.second), BarWord(yk.second));
            GaussianRational c = xc * yc;
            for (const auto& [ls, lc] : left.terms())
                for (const auto& [rs, rc] : right.terms())
                    result.add_term({ls, rs}, c * lc * rc);
        }
    }
    return result;
}

nlohmann::json barword_to_json(const BarWord& w) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [seq, c] : w.terms()) {
        nlohmann::json slots = nlohmann::json::array();
        for (const Slot& s : seq) {
            slots.push_back({{"etas", {{"theta0", s.etas.e0}, {"theta1", s.etas.e1}}},
                             {"omega", base_form_name(s.omega)}});
        }
        terms.push_back({{"coeff", c.str()}, {"slots", std::move(slots)}});
    }
    return {{"terms", std::move(terms)}};
}

BarWord barword_from_json(const nlohmann::json& j, const BarAlgebra& alg) {
    if (!j.contains("terms") || !j["terms"].is_array())
        throw ParseError("bar word JSON must contain a 'terms' array");
    BarWord w;
    for (const auto& term : j["terms"]) {
        if (!term.contains("coeff") || !term.contains("slots"))
            throw ParseError("bar word term needs 'coeff' and 'slots'");
        GaussianRational c = GaussianRational::parse(term["coeff"].get<std::string>());
        SlotSeq seq;
        for (const auto& js : term["slots"]) {
            Slot s;
            if (js.contains("etas")) {
                const auto& etas = js["etas"];
                s.etas.e0 = etas.value("theta0", 0);
                s.etas.e1 = etas.value("theta1", 0);
            }
            s.omega = base_form_from_name(js.at("omega").get<std::string>());
            seq.push_back(s);
        }
        alg.validate_sequence(seq);
        w.add_term(seq, c);
    }
    return w;
}

} // namespace chl
