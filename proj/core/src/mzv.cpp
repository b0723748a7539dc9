#include "chenlegendre/mzv.hpp"

#include <cmath>

#include "chenlegendre/path.hpp"

namespace chl {

int MzvIndex::weight() const {
    int w = 0;
    for (int ki : k) w += ki;
    return w;
}

std::string MzvIndex::str() const {
    std::string s = "zeta(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

namespace {

// sum_{n>N} ln^q(n) / n^s for s >= 2, by Euler-Maclaurin:
// sum_{n>N} h(n) = int_N^inf h - h(N)/2 - h'(N)/12 + h'''(N)/720 - ...
double log_power_tail(int q, int s, double n) {
    // Integral int_N^inf ln^q x x^{-s} dx by the downward recursion.
    double integral = 0.0;
    {
        double acc = std::pow(n, 1.0 - s) / (s - 1.0);
        double ln = std::log(n);
        // I(q) = ln^q N * N^(1-s)/(s-1) + q/(s-1) * I(q-1); unroll from 0 up.
        double iq = acc; // I(0)
        for (int j = 1; j <= q; ++j)
            iq = std::pow(ln, j) * std::pow(n, 1.0 - s) / (s - 1.0) + j / (s - 1.0) * iq;
        integral = iq;
    }
    // Derivatives of h = sum c_i ln^i x * x^(-p): start with c = e_q, p = s.
    // d/dx maps (c, p) to (c'_i = (i+1)c_{i+1} - p c_i, p+1).
    auto eval = [&](const std::vector<double>& c, int p) {
        double ln = std::log(n);
        double acc = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * std::pow(ln, static_cast<double>(i));
        return acc * std::pow(n, -static_cast<double>(p));
    };
    auto derive = [](std::vector<double> c, int p) {
        std::vector<double> d(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            d[i] = -static_cast<double>(p) * c[i];
            if (i + 1 < c.size()) d[i] += static_cast<double>(i + 1) * c[i + 1];
        }
        return d;
    };
    std::vector<double> c(static_cast<std::size_t>(q) + 1, 0.0);
    c.back() = 1.0;
    double h0 = eval(c, s);
    auto c1 = derive(c, s);
    double h1 = eval(c1, s + 1);
    auto c2 = derive(c1, s + 1);
    auto c3 = derive(c2, s + 2);
    double h3 = eval(c3, s + 3);
    return integral - h0 / 2.0 - h1 / 12.0 + h3 / 720.0;
}

struct TailModel {
    int q_max;
    std::vector<Cplx> coeffs; // beta_0..beta_Q, gamma_0..gamma_Q
};

// Fit U(n) ~ sum beta_q ln^q n + sum gamma_q ln^q n / n over [n0, n1].
TailModel fit_inner_sum(const std::vector<double>& u, std::size_t n0, std::size_t n1, int q_max) {
    std::size_t stride = std::max<std::size_t>(1, (n1 - n0) / 1024);
    std::vector<double> ns;
    for (std::size_t n = n0; n <= n1; n += stride) ns.push_back(static_cast<double>(n));
    std::vector<std::vector<double>> cols;
    for (int q = 0; q <= q_max; ++q) {
        std::vector<double> col(ns.size());
        for (std::size_t i = 0; i < ns.size(); ++i) col[i] = std::pow(std::log(ns[i]), q);
        cols.push_back(std::move(col));
    }
    for (int q = 0; q <= q_max; ++q) {
        std::vector<double> col(ns.size());
        for (std::size_t i = 0; i < ns.size(); ++i)
            col[i] = std::pow(std::log(ns[i]), q) / ns[i];
        cols.push_back(std::move(col));
    }
    std::vector<Cplx> rhs(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i)
        rhs[i] = u[static_cast<std::size_t>(ns[i])];
    TailModel model;
    model.q_max = q_max;
    model.coeffs = least_squares(std::move(cols), std::move(rhs));
    return model;
}

double tail_from_model(const TailModel& model, int s, double n) {
    double tail = 0.0;
    for (int q = 0; q <= model.q_max; ++q)
        tail += model.coeffs[static_cast<std::size_t>(q)].real() * log_power_tail(q, s, n);
    for (int q = 0; q <= model.q_max; ++q)
        tail += model.coeffs[static_cast<std::size_t>(model.q_max + 1 + q)].real() *
                log_power_tail(q, s + 1, n);
    return tail;
}

// One full evaluation at truncation N; also reports the value the same
// machinery produces at N/2 as a consistency estimate.
std::pair<double, double> evaluate_mzv(const std::vector<int>& k, std::size_t n_max) {
    const std::size_t d = k.size();
    const int kd = k.back();
    std::vector<double> u(n_max + 1, 1.0); // U_0
    int logs = 0;
    for (std::size_t j = 0; j + 1 < d; ++j) {
        std::vector<double> next(n_max + 1, 0.0);
        long double acc = 0.0L;
        for (std::size_t n = 1; n <= n_max; ++n) {
            next[n] = static_cast<double>(acc);
            acc += static_cast<long double>(u[n]) * std::pow(static_cast<double>(n), -k[j]);
        }
        u = std::move(next);
        if (k[j] == 1) ++logs;
    }
    auto value_at = [&](std::size_t n_cut) {
        long double direct = 0.0L;
        for (std::size_t n = 1; n <= n_cut; ++n)
            direct += static_cast<long double>(u[n]) * std::pow(static_cast<double>(n), -kd);
        double tail;
        if (d == 1) {
            tail = log_power_tail(0, kd, static_cast<double>(n_cut));
        } else {
            TailModel model = fit_inner_sum(u, n_cut / 2, n_cut, logs);
            tail = tail_from_model(model, kd, static_cast<double>(n_cut));
        }
        return static_cast<double>(direct) + tail;
    };
    return {value_at(n_max), value_at(n_max / 2)};
}

} // namespace

double mzv_series(const MzvIndex& idx, double tol) {
    if (idx.k.empty()) throw DomainError("empty multiple zeta index");
    for (int ki : idx.k)
        if (ki < 1) throw DomainError("multiple zeta index entries must be >= 1");
    if (!idx.is_convergent())
        throw DomainError(idx.str() + " diverges (k_d must be >= 2)");
    std::size_t n_max = 1 << 17;
    constexpr std::size_t kCap = 1 << 22;
    while (true) {
        auto [value, check] = evaluate_mzv(idx.k, n_max);
        if (std::abs(value - check) < 0.5 * tol) return value;
        if (n_max >= kCap)
            throw PrecisionError(idx.str() + " did not reach the requested tolerance at the truncation cap");
        n_max *= 4;
    }
}

BarWord mzv_word(const MzvIndex& idx, const BarAlgebra& alg) {
    SlotSeq seq;
    for (int ki : idx.k) {
        if (ki < 1) throw DomainError("multiple zeta index entries must be >= 1");
        seq.push_back({FiberMonomial{}, BaseForm::chi1});
        for (int j = 1; j < ki; ++j) seq.push_back({FiberMonomial{}, BaseForm::chi0});
    }
    return alg.word(std::move(seq));
}

std::vector<WeightedForm> mzv_forms(const MzvIndex& idx) {
    std::vector<WeightedForm> forms;
    for (int ki : idx.k) {
        forms.push_back({BaseForm::chi1, {}});
        for (int j = 1; j < ki; ++j) forms.push_back({BaseForm::chi0, {}});
    }
    return forms;
}

double mzv_iterint(const MzvIndex& idx, double tol, double ode_tol, int j0, int j1) {
    std::vector<WeightedForm> forms = mzv_forms(idx);
    Cplx v = reg_iterint(Path::dch(), forms, tol, ode_tol, j0, j1);
    if (std::abs(v.imag()) > std::max(tol, 1e-9))
        throw PrecisionError("multiple zeta integral returned a non-real value");
    return v.real();
}

std::vector<MzvIndex> convergent_indices_of_weight(int weight) {
    std::vector<MzvIndex> out;
    std::vector<int> current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            if (!current.empty() && current.back() >= 2) out.push_back({current});
            return;
        }
        for (int part = 1; part <= remaining; ++part) {
            current.push_back(part);
            rec(remaining - part);
            current.pop_back();
        }
    };
    rec(weight);
    return out;
}

} // namespace chl
