#include "chenlegendre/cycleword.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace chl {

const char* cycle_basis_name(CycleBasis c) {
    return c == CycleBasis::alpha ? "alpha" : "beta";
}

CycleBasis cycle_basis_from_name(const std::string& name) {
    if (name == "alpha") return CycleBasis::alpha;
    if (name == "beta") return CycleBasis::beta;
    throw ParseError("unknown cycle '" + name + "' (expected 'alpha' or 'beta')");
}

CycleWord CycleWord::single(std::vector<CycleSlot> slots, GaussianRational coeff) {
    CycleWord w;
    CycleTerm t;
    t.coeff = std::move(coeff);
    for (auto& s : slots) std::sort(s.factors.begin(), s.factors.end());
    t.slots = std::move(slots);
    if (!t.coeff.is_zero()) w.terms.push_back(std::move(t));
    return w;
}

namespace {

CycleTerm term_from_json(const nlohmann::json& j) {
    CycleTerm t;
    if (j.contains("coeff")) t.coeff = GaussianRational::parse(j["coeff"].get<std::string>());
    if (!j.contains("slots") || !j["slots"].is_array())
        throw ParseError("cycle word term needs a 'slots' array");
    for (const auto& js : j["slots"]) {
        CycleSlot slot;
        if (!js.is_array()) throw ParseError("cycle slot must be an array of cycle names");
        for (const auto& f : js) slot.factors.push_back(cycle_basis_from_name(f.get<std::string>()));
        std::sort(slot.factors.begin(), slot.factors.end());
        t.slots.push_back(std::move(slot));
    }
    return t;
}

} // namespace

nlohmann::json cycleword_to_json(const CycleWord& w) {
    auto term_json = [](const CycleTerm& t) {
        nlohmann::json slots = nlohmann::json::array();
        for (const auto& s : t.slots) {
            nlohmann::json factors = nlohmann::json::array();
            for (CycleBasis f : s.factors) factors.push_back(cycle_basis_name(f));
            slots.push_back(std::move(factors));
        }
        return nlohmann::json{{"slots", std::move(slots)}, {"coeff", t.coeff.str()}};
    };
    if (w.terms.size() == 1) return term_json(w.terms.front());
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : w.terms) terms.push_back(term_json(t));
    return {{"terms", std::move(terms)}};
}

CycleWord cycleword_from_json(const nlohmann::json& j) {
    CycleWord w;
    if (j.contains("terms")) {
        for (const auto& jt : j["terms"]) w.terms.push_back(term_from_json(jt));
    } else {
        w.terms.push_back(term_from_json(j));
    }
    return w;
}

FormalPathCombination augmentation_power(const std::vector<Path>& loops) {
    if (loops.empty()) throw DomainError("augmentation power needs at least one factor");
    Cplx base = loops.front().start();
    for (const Path& l : loops) {
        if (std::abs(l.start() - base) > 1e-12 || std::abs(l.end() - base) > 1e-12)
            throw DomainError("augmentation factors must be loops at a common basepoint");
    }
    FormalPathCombination comb;
    comb.basepoint = base;
    const std::size_t n = loops.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        PathWord word;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) word.factors.push_back(loops[i]);
        std::size_t chosen = word.factors.size();
        Rational coeff = ((n - chosen) % 2 == 0) ? Rational(1) : Rational(-1);
        comb.terms.push_back({coeff, std::move(word)});
    }
    return comb;
}

} // namespace chl
