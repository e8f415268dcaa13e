#include "discrete.hpp"

#include <cmath>

#include "numerics.hpp"

namespace hyperwave::discrete {

using detail::is_integer;
using detail::log_cosh;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kI(0.0, 1.0);

bool admissible_k(double k) {
    return detail::is_half_integer_grid(k) && k >= -0.5 - 1e-12;
}

void require_dplus(double k, double m) {
    if (!admissible_k(k))
        throw DomainError("discrete: k must be one of -1/2, 0, 1/2, 1, ...");
    if (!is_integer(m - k))
        throw DomainError("discrete: m - k must be an integer");
    if (m < k + 1.0 - 1e-12)
        throw DomainError("D+ requires m >= k+1");
}

void require_dminus(double k, double m) {
    if (!admissible_k(k))
        throw DomainError("discrete: k must be one of -1/2, 0, 1/2, 1, ...");
    if (!is_integer(m - k))
        throw DomainError("discrete: m - k must be an integer");
    if (m > -(k + 1.0) + 1e-12)
        throw DomainError("D- requires m <= -(k+1)");
}

void require_normalizable(double k) {
    if (std::abs(k + 0.5) < 1e-12)
        throw DomainError("discrete: k = -1/2 has vanishing norm constant "
                          "(lowest-weight function is not square integrable)");
}

double fac(double v) { return std::tgamma(v + 1.0); }

// cosh^{-(k+1)} tau * sum_r (-1)^r (mm-r-1)! / (r! (n-2r)!) (2 tanh tau)^{n-2r},
// n = mm-k-1. Shared radial of the D+/D- sum forms; never forms cosh^m.
double radial_sum(double k, double mm, double tau) {
    const int n = static_cast<int>(std::llround(mm - k - 1.0));
    const double th2 = 2.0 * std::tanh(tau);
    double s = 0.0;
    double sign = 1.0;
    for (int r = 0; r <= n / 2; ++r) {
        s += sign * std::tgamma(mm - r) / (fac(r) * fac(n - 2 * r)) * std::pow(th2, n - 2 * r);
        sign = -sign;
    }
    return std::exp(-(k + 1.0) * log_cosh(tau)) * s;
}

int parity_sign(double e) { // (-1)^e for integer-valued e
    return (std::llround(e) % 2 == 0) ? 1 : -1;
}

} // namespace

void DiscreteSpec::validate() const {
    if (series == Series::d_plus)
        require_dplus(k, m);
    else
        require_dminus(k, m);
}

double lowest_weight_norm(double k) {
    if (!admissible_k(k))
        throw DomainError("lowest_weight_norm: k must be one of -1/2, 0, 1/2, 1, ...");
    require_normalizable(k);
    const double ratio = numerics::generalized_double_factorial_ratio(k); // (2k-1)!!/(2k)!!
    return 1.0 / (std::sqrt(2.0) * kPi * std::sqrt(ratio));
}

double assoc_p(double k, double m, double x, const EvalOptions& opts) {
    return assoc_p_derivs(k, m, x, opts).p;
}

AssocPDerivs assoc_p_derivs(double k, double m, double x, const EvalOptions&) {
    require_dplus(k, m);
    const int n = static_cast<int>(std::llround(m - k - 1.0));
    const double u = 1.0 + x * x;
    double p = 0.0, dp = 0.0, d2p = 0.0;
    double sign = 1.0;
    for (int r = 0; r <= n / 2; ++r) {
        // term: C x^pw (1+x^2)^{q}, pw = n-2r, q = r - m/2
        const double c =
            sign * std::tgamma(m - r) / (fac(r) * fac(n - 2 * r)) * std::pow(2.0, n - 2 * r);
        const int pw = n - 2 * r;
        const double q = r - 0.5 * m;
        const double uq = std::pow(u, q);
        const double xp = std::pow(x, pw);
        p += c * xp * uq;
        double d = 0.0;
        if (pw >= 1) d += pw * std::pow(x, pw - 1) * uq;
        d += 2.0 * q * std::pow(x, pw + 1) * std::pow(u, q - 1.0);
        dp += c * d;
        double d2 = 0.0;
        if (pw >= 2) d2 += pw * (pw - 1) * std::pow(x, pw - 2) * uq;
        d2 += 2.0 * q * (2 * pw + 1) * xp * std::pow(u, q - 1.0);
        d2 += 4.0 * q * (q - 1.0) * std::pow(x, pw + 2) * std::pow(u, q - 2.0);
        d2p += c * d2;
        sign = -sign;
    }
    const double front = std::pow(2.0, k) * fac(n);
    return {front * p, front * dp, front * d2p};
}

Complex y_dplus(double k, double m, double tau, double phi, const EvalOptions&) {
    require_dplus(k, m);
    require_normalizable(k);
    const double logpref = k * M_LN2 + 0.5 * (std::log(2.0 * k + 1.0) + std::lgamma(m - k) -
                                              std::log(2.0 * kPi * kPi) - std::lgamma(m + k + 1.0));
    return detail::ensure_finite(
        std::exp(logpref) * std::exp(kI * m * phi) * radial_sum(k, m, tau), "y_dplus");
}

Complex y_dplus_hypergeometric(double k, double m, double tau, double phi,
                               const EvalOptions& opts) {
    require_dplus(k, m);
    require_normalizable(k);
    const long d = std::llround(m - k);
    const double z = std::tanh(tau) * std::tanh(tau);
    const double coshpow = std::exp(-(k + 1.0) * log_cosh(tau));
    Complex out;
    if (d % 2 == 1) {
        const double ph = parity_sign((m - k - 1.0) / 2.0);
        const double pref = std::exp(
            0.5 * (std::log(2.0 * k + 1.0) + std::lgamma(0.5 * (m - k)) +
                   std::lgamma(0.5 * (m + k + 1.0)) - std::log(4.0 * kPi * kPi) -
                   std::lgamma(0.5 * (m - k + 1.0)) - std::lgamma(0.5 * (m + k + 2.0))));
        const Complex F = numerics::gauss_2f1(
            {Complex(0.5 * (m + k + 1.0)), Complex(0.5 * (-m + k + 1.0)), Complex(0.5), z}, opts);
        out = ph * pref * std::exp(kI * m * phi) * coshpow * F;
    } else {
        const double ph = parity_sign((m - k - 2.0) / 2.0);
        const double pref = std::exp(
            0.5 * (std::log(2.0 * k + 1.0) + std::lgamma(0.5 * (m - k + 1.0)) +
                   std::lgamma(0.5 * (m + k + 2.0)) - std::log(kPi * kPi) -
                   std::lgamma(0.5 * (m - k)) - std::lgamma(0.5 * (m + k + 1.0))));
        const Complex F = numerics::gauss_2f1(
            {Complex(0.5 * (m + k + 2.0)), Complex(0.5 * (-m + k + 2.0)), Complex(1.5), z}, opts);
        out = ph * pref * std::exp(kI * m * phi) * coshpow * std::tanh(tau) * F;
    }
    return detail::ensure_finite(out, "y_dplus_hypergeometric");
}

Complex y_dminus(double k, double m, double tau, double phi, const EvalOptions&) {
    require_dminus(k, m);
    require_normalizable(k);
    const double sgn = parity_sign(m + k + 1.0);
    const double logpref =
        k * M_LN2 + std::lgamma(-m - k) +
        0.5 * (std::log(2.0 * k + 1.0) - std::log(2.0 * kPi * kPi) - std::lgamma(-m - k) -
               std::lgamma(k - m + 1.0));
    return detail::ensure_finite(
        sgn * std::exp(logpref) * std::exp(kI * m * phi) * radial_sum(k, -m, tau), "y_dminus");
}

Complex volume_function(double k, double m, double a, double tau, double phi,
                        const EvalOptions& opts) {
    if (!(a > 0.0)) throw DomainError("volume_function: requires a > 0");
    return std::pow(a, k) * y_dplus(k, m, tau, phi, opts);
}

namespace {

struct RecTerms {
    double lhs;
    double rhs;
    double scale;
};

double P(double k, double m, double x, const EvalOptions& o) { return assoc_p(k, m, x, o); }

RecTerms recurrence_terms(Recurrence id, double k, double m, double x, const EvalOptions& o) {
    const double u = 1.0 + x * x;
    const double w = std::sqrt(u);
    switch (id) {
    case Recurrence::a1: {
        const auto d = assoc_p_derivs(k, m, x, o);
        const double t1 = u * d.d2p;
        const double t2 = 2.0 * x * d.dp;
        const double t3 = (-k * (k + 1.0) + m * m / u) * d.p;
        return {t1 + t2 + t3, 0.0,
                std::max({std::abs(t1), std::abs(t2), std::abs(t3)})};
    }
    case Recurrence::a2: {
        const auto d = assoc_p_derivs(k, m, x, o);
        const double lhs = u * d.dp;
        const double rhs = -w * P(k, m + 1.0, x, o) + m * x * d.p;
        return {lhs, rhs, std::max(std::abs(lhs), std::abs(rhs))};
    }
    case Recurrence::a3: {
        const double t1 = P(k, m + 2.0, x, o);
        const double t2 = -2.0 * (m + 1.0) * x / w * P(k, m + 1.0, x, o);
        const double t3 = (m - k) * (m + k + 1.0) * P(k, m, x, o);
        return {t1 + t2 + t3, 0.0,
                std::max({std::abs(t1), std::abs(t2), std::abs(t3)})};
    }
    case Recurrence::a4: {
        const auto d = assoc_p_derivs(k, m, x, o);
        const double coeff = (m + k) * (m - k - 1.0);
        const double lhs = u * d.dp;
        const double rhs = (coeff != 0.0 ? coeff * w * P(k, m - 1.0, x, o) : 0.0) - m * x * d.p;
        return {lhs, rhs, std::max(std::abs(lhs), std::abs(rhs))};
    }
    case Recurrence::a5: {
        const double lhs = 2.0 * k * P(k - 1.0, m, x, o);
        const double coeff = (m - k) * (m - k - 1.0);
        const double rhs = w * P(k, m + 1.0, x, o) - 2.0 * (m - k) * x * P(k, m, x, o) +
                           (coeff != 0.0 ? w * coeff * P(k, m - 1.0, x, o) : 0.0);
        return {lhs, rhs, std::max(std::abs(lhs), std::abs(rhs))};
    }
    case Recurrence::a6: {
        const double lhs = P(k - 1.0, m, x, o) - x * P(k, m, x, o);
        const double coeff = k - m + 1.0;
        const double rhs = coeff != 0.0 ? coeff * w * P(k, m - 1.0, x, o) : 0.0;
        return {lhs, rhs, std::max({std::abs(lhs), std::abs(rhs), std::abs(x * P(k, m, x, o))})};
    }
    }
    throw UnknownRelationError("recurrence_residual: bad identity id");
}

} // namespace

double recurrence_residual(Recurrence id, double k, double m, double x, const EvalOptions& o) {
    const auto t = recurrence_terms(id, k, m, x, o);
    return std::abs(t.lhs - t.rhs);
}

double recurrence_scale(Recurrence id, double k, double m, double x, const EvalOptions& o) {
    return std::max(1.0, recurrence_terms(id, k, m, x, o).scale);
}

} // namespace hyperwave::discrete
