// Test-only oracles, independent of the production evaluation paths.
#ifndef HYPERWAVE_TEST_ORACLES_HPP
#define HYPERWAVE_TEST_ORACLES_HPP

#include <cmath>
#include <complex>
#include <map>
#include <utility>

#include "core.hpp"

namespace oracles {

using hyperwave::Complex;

/// Relative distance used by the CHECK helpers.
inline double cdist(Complex a, Complex b) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / scale;
}

/// Plain term-by-term hypergeometric summation in extended precision.
/// No transformations; valid for |z| < 1 or terminating parameters.
inline Complex brute_2f1(Complex a, Complex b, Complex c, double z, int max_terms = 100000) {
    using CLD = std::complex<long double>;
    CLD A(a.real(), a.imag()), B(b.real(), b.imag()), C(c.real(), c.imag());
    CLD t(1.0L), s(1.0L);
    for (int n = 0; n < max_terms; ++n) {
        const auto ln = static_cast<long double>(n);
        t *= (A + ln) * (B + ln) / ((C + ln) * (ln + 1.0L)) * static_cast<long double>(z);
        s += t;
        if (n > 8 && std::abs(t) < 1e-22L * std::abs(s)) break;
    }
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

/// Order-th derivative of the brute series: sum_j c_j j(j-1)...(j-n+1) z^{j-n}.
inline Complex brute_2f1_deriv(Complex a, Complex b, Complex c, double z, int order) {
    using CLD = std::complex<long double>;
    CLD A(a.real(), a.imag()), B(b.real(), b.imag()), C(c.real(), c.imag());
    CLD cj(1.0L), s(0.0L);
    for (int j = 0; j < 100000; ++j) {
        if (j >= order) {
            long double fall = 1.0L;
            for (int t = 0; t < order; ++t) fall *= static_cast<long double>(j - t);
            const CLD term = cj * fall *
                             std::pow(static_cast<long double>(z),
                                      static_cast<long double>(j - order));
            s += term;
            if (j > order + 8 && std::abs(term) < 1e-22L * std::abs(s)) break;
        }
        const auto lj = static_cast<long double>(j);
        cj *= (A + lj) * (B + lj) / ((C + lj) * (lj + 1.0L));
    }
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

/// Repeated symbolic differentiation of (1+x^2)^{-(k+1)}: the generating-
/// expression route to P^m_k, exact up to rounding.
inline double rodrigues_p(double k, double m, double x) {
    const int n = static_cast<int>(std::llround(m - k - 1.0));
    std::map<std::pair<int, int>, double> terms{{{0, 0}, 1.0}}; // x^j (1+x^2)^{-(k+1)-i}
    for (int d = 0; d < n; ++d) {
        std::map<std::pair<int, int>, double> next;
        for (const auto& [key, c] : terms) {
            const auto [j, i] = key;
            const double p = k + 1.0 + i;
            if (j > 0) next[{j - 1, i}] += c * j;
            next[{j + 1, i + 1}] += -2.0 * p * c;
        }
        terms = std::move(next);
    }
    const double u = 1.0 + x * x;
    double sum = 0.0;
    for (const auto& [key, c] : terms) {
        const auto [j, i] = key;
        sum += c * std::pow(x, j) * std::pow(u, -(k + 1.0) - i);
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(2.0, k) * std::tgamma(k + 1.0) * std::pow(u, 0.5 * m) * sum;
}

} // namespace oracles

#endif
