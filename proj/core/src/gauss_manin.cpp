#include "chenlegendre/gauss_manin.hpp"

#include <map>

namespace chl {

GaussManinMatrix::GaussManinMatrix(RationalFunction e00, RationalFunction e01,
                                   RationalFunction e10, RationalFunction e11) {
    entries_[0][0] = std::move(e00);
    entries_[0][1] = std::move(e01);
    entries_[1][0] = std::move(e10);
    entries_[1][1] = std::move(e11);
    // Entries must have poles only at lambda in {0,1}: bring them over the
    // common denominator lambda*(1-lambda) and keep the exact numerators.
    Polynomial one(GaussianRational(1));
    Polynomial den = Polynomial::lambda() * (one - Polynomial::lambda());
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            auto [quot, rem] = (entries_[i][j].num() * den).divmod(entries_[i][j].den());
            if (!rem.is_zero())
                throw DomainError("connection entry has a pole outside {0, 1}");
            numerators_[i][j] = std::move(quot);
        }
    }
}

std::array<std::array<std::complex<double>, 2>, 2>
GaussManinMatrix::transport_matrix(std::complex<double> lambda) const {
    return transport_matrix(lambda, 1.0 - lambda);
}

std::array<std::array<std::complex<double>, 2>, 2>
GaussManinMatrix::transport_matrix(std::complex<double> lambda,
                                   std::complex<double> one_minus_lambda) const {
    std::complex<double> den = lambda * one_minus_lambda;
    if (std::abs(den) == 0.0)
        throw PoleError("connection evaluated on a singular fiber", lambda);
    std::array<std::array<std::complex<double>, 2>, 2> m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m[i][j] = numerators_[j][i].eval(lambda) / den; // transpose
    return m;
}

const GaussManinMatrix& legendre_gauss_manin() {
    static const GaussManinMatrix gm = [] {
        using P = Polynomial;
        GaussianRational one(1);
        P lam = P::lambda();
        P den = lam * (P(one) - lam); // lambda*(1-lambda)
        GaussianRational half(Rational(1, 2));
        GaussianRational quarter(Rational(1, 4));
        // Numerators over the common denominator lambda*(1-lambda).
        P n00 = lam * half;                     // lambda/2
        P n01 = P(one);                         // 1
        P n10 = -(lam * quarter);               // -lambda/4
        P n11 = lam * half - P(one);            // lambda/2 - 1
        return GaussManinMatrix(RationalFunction(n00, den), RationalFunction(n01, den),
                                RationalFunction(n10, den), RationalFunction(n11, den));
    }();
    return gm;
}

std::vector<std::pair<FiberMonomial, RationalFunction>>
gm_derivative(const FiberMonomial& m, const GaussManinMatrix& gm) {
    // d(theta0^e0 theta1^e1) = e0 theta0^(e0-1) theta1^e1 d(theta0)
    //                        + e1 theta0^e0 theta1^(e1-1) d(theta1),
    // with d(theta_j) = sum_i entry(i,j) theta_i.
    std::map<std::pair<int, int>, RationalFunction> acc;
    auto add = [&](int e0, int e1, const RationalFunction& coeff) {
        if (coeff.is_zero()) return;
        auto key = std::make_pair(e0, e1);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, coeff);
        else
            it->second += coeff;
    };
    if (m.e0 > 0) {
        GaussianRational e0(Rational(m.e0));
        add(m.e0, m.e1, gm.entry(0, 0) * RationalFunction(e0));
        add(m.e0 - 1, m.e1 + 1, gm.entry(1, 0) * RationalFunction(e0));
    }
    if (m.e1 > 0) {
        GaussianRational e1(Rational(m.e1));
        add(m.e0 + 1, m.e1 - 1, gm.entry(0, 1) * RationalFunction(e1));
        add(m.e0, m.e1, gm.entry(1, 1) * RationalFunction(e1));
    }
    std::vector<std::pair<FiberMonomial, RationalFunction>> result;
    for (auto& [key, coeff] : acc) {
        if (coeff.is_zero()) continue;
        result.push_back({FiberMonomial{key.first, key.second}, std::move(coeff)});
    }
    return result;
}

} // namespace chl
