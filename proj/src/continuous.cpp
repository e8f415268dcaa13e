#include "continuous.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "numerics.hpp"

namespace hyperwave::continuous {

using numerics::GammaMagKind;
using numerics::gamma_abs;
using numerics::gamma_magnitude_sq;
using detail::is_integer;
using detail::log_cosh;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kI(0.0, 1.0);

void require_lambda(double lambda) {
    if (!(lambda > 0.0))
        throw DomainError("principal series requires lambda > 0 (k = -1/2 + i lambda)");
}

void require_weight(double m) {
    if (!detail::is_half_integer_grid(m))
        throw DomainError("principal series requires integer or half-integer m");
}

double abs_gamma_ix(double lambda) {
    return std::sqrt(gamma_magnitude_sq(GammaMagKind::ix, lambda));
}

// cosh^{-(1/2 + i lambda)} tau
Complex cosh_principal_power(double lambda, double tau) {
    return std::exp(-(0.5 + kI * lambda) * log_cosh(tau));
}

double fac(long n) { return std::tgamma(static_cast<double>(n) + 1.0); }

} // namespace

void PrincipalSpec::validate() const {
    require_lambda(lambda);
    require_weight(m);
    if ((kind == Kind::seq1 || kind == Kind::seq2) && !is_integer(m) &&
        !is_integer(m - 0.5))
        throw DomainError("principal sequences require 2m integral");
}

void SupplementarySpec::validate() const {
    if (!(gamma > 0.0 && gamma < 0.5))
        throw DomainError("supplementary series requires 0 < gamma < 1/2 (-1/2 < k < 0)");
}

double norm_even(double m, double lambda) {
    require_lambda(lambda);
    require_weight(m);
    const double g1 = gamma_magnitude_sq(GammaMagKind::general, 0.5 * (m + 0.5 + kI * lambda));
    const double g2 = gamma_magnitude_sq(GammaMagKind::general, 0.5 * (-m + 0.5 + kI * lambda));
    const double gl = gamma_magnitude_sq(GammaMagKind::ix, lambda);
    return std::sqrt(g1 * g2 / gl) / (2.0 * std::sqrt(2.0) * std::pow(kPi, 1.5));
}

double norm_odd(double m, double lambda) {
    require_lambda(lambda);
    require_weight(m);
    const double g1 = gamma_magnitude_sq(GammaMagKind::general, 0.5 * (m + 1.5 + kI * lambda));
    const double g2 = gamma_magnitude_sq(GammaMagKind::general, 0.5 * (-m + 1.5 + kI * lambda));
    const double gl = gamma_magnitude_sq(GammaMagKind::ix, lambda);
    return std::sqrt(g1 * g2 / gl) / (std::sqrt(2.0) * std::pow(kPi, 1.5));
}

double phase_even(long m) {
    if (m < 0) throw DomainError("phase_even: requires nonnegative integer m");
    const long e = (m % 2 == 0) ? m / 2 : (m + 1) / 2;
    return (e % 2 == 0) ? 1.0 : -1.0;
}

double phase_odd(long m) {
    if (m < 0) throw DomainError("phase_odd: requires nonnegative integer m");
    const long e = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
    return (e % 2 == 0) ? 1.0 : -1.0;
}

namespace {

double phase_signed(Parity parity, double m) {
    if (!is_integer(m)) return 1.0; // half-integer phases are fixed at the vacuum only
    const long am = std::llround(std::abs(m));
    double ph = (parity == Parity::even) ? phase_even(am) : phase_odd(am);
    if (m < 0 && am % 2 != 0) ph = -ph; // c_{-m} = (-1)^m c_m, matching the conjugation law
    return ph;
}

} // namespace

Complex y_principal_raw(Parity parity, double m, double lambda, double tau, double phi,
                        const EvalOptions& opts) {
    require_lambda(lambda);
    require_weight(m);
    const double sech_sq = std::exp(-2.0 * log_cosh(tau));
    const double z = std::tanh(tau) * std::tanh(tau);
    Complex out;
    if (parity == Parity::even) {
        const Complex F = numerics::gauss_2f1({0.5 * (m + 0.5 + kI * lambda),
                                               0.5 * (-m + 0.5 + kI * lambda), Complex(0.5), z},
                                              opts, sech_sq);
        out = phase_signed(parity, m) * norm_even(m, lambda) * std::exp(kI * m * phi) *
              cosh_principal_power(lambda, tau) * F;
    } else {
        const Complex F = numerics::gauss_2f1({0.5 * (m + 1.5 + kI * lambda),
                                               0.5 * (-m + 1.5 + kI * lambda), Complex(1.5), z},
                                              opts, sech_sq);
        out = phase_signed(parity, m) * norm_odd(m, lambda) * std::exp(kI * m * phi) *
              cosh_principal_power(lambda, tau) * std::tanh(tau) * F;
    }
    return detail::ensure_finite(out, "y_principal_raw");
}

double z_factor(long m, double lambda) {
    if (m < 0) throw DomainError("z_factor: requires nonnegative integer m");
    double p = 1.0;
    for (long r = 1; r <= m; ++r) {
        const double half_odd = (2.0 * r - 1.0) / 2.0;
        p *= std::sqrt(half_odd * half_odd + lambda * lambda);
    }
    return 1.0 / p;
}

double z_factor_gamma_a(long m, double lambda) {
    const Complex num = 0.5 * (-m + 0.5 + kI * lambda);
    const Complex den = 0.5 * (m + 0.5 + kI * lambda);
    return std::pow(2.0, -static_cast<double>(m)) * gamma_abs(num) / gamma_abs(den);
}

double z_factor_gamma_b(long m, double lambda) {
    const Complex num = 0.5 * (-m + 1.5 + kI * lambda);
    const Complex den = 0.5 * (m + 1.5 + kI * lambda);
    return std::pow(2.0, -static_cast<double>(m)) * gamma_abs(num) / gamma_abs(den);
}

Complex y_seq(int seq, long m, double lambda, double tau, double phi,
              const EvalOptions& opts) {
    require_lambda(lambda);
    if (m < 0) throw DomainError("y_seq: requires nonnegative integer m (use "
                                 "y_principal_negative for m < 0)");
    if (seq != 1 && seq != 2) throw DomainError("y_seq: sequence must be 1 or 2");
    const double th = std::tanh(tau);
    const double sech_sq = std::exp(-2.0 * log_cosh(tau));
    const double zz = th * th;
    const Complex base = (seq == 1) ? 0.25 + 0.5 * kI * lambda : 0.75 + 0.5 * kI * lambda;
    const double chalf = (seq == 1) ? 0.5 : 1.5;
    const long top = (seq == 1) ? m / 2 : (m + 1) / 2;
    const long pw0 = (seq == 1) ? m : m + 1;

    Complex sum(0.0, 0.0);
    double sign = 1.0;
    for (long r = 0; r <= top; ++r) {
        const long pw = pw0 - 2 * r;
        const double gm = gamma_magnitude_sq(GammaMagKind::general, base + static_cast<double>(m - r));
        const double coeff = sign * std::pow(2.0 * th, pw) / (fac(r) * fac(pw)) * gm /
                             std::tgamma(chalf + static_cast<double>(m - r));
        const Complex F = numerics::gauss_2f1(
            {base + static_cast<double>(m - r), base, Complex(chalf + static_cast<double>(m - r)), zz},
            opts, sech_sq);
        sum += coeff * F;
        sign = -sign;
    }
    const double front_fac = (seq == 1) ? fac(m) / (2.0 * std::sqrt(2.0) * kPi)
                                        : fac(m + 1) / (4.0 * std::sqrt(2.0) * kPi);
    const Complex out = front_fac / abs_gamma_ix(lambda) * z_factor(m, lambda) *
                        std::exp(kI * static_cast<double>(m) * phi) *
                        cosh_principal_power(lambda, tau) * sum;
    return detail::ensure_finite(out, "y_seq");
}

namespace {

Complex legendre_p_sum(int which, long m, double lambda, double x, const EvalOptions& opts) {
    const Complex base = (which == 1) ? 0.25 + 0.5 * kI * lambda : 0.75 + 0.5 * kI * lambda;
    const double chalf = (which == 1) ? 0.5 : 1.5;
    const long top = (which == 1) ? m / 2 : (m + 1) / 2;
    const long pw0 = (which == 1) ? m : m + 1;
    const double z = -x * x;

    Complex sum(0.0, 0.0);
    double sign = 1.0;
    for (long r = 0; r <= top; ++r) {
        const long pw = pw0 - 2 * r;
        const double gm = gamma_magnitude_sq(GammaMagKind::general, base + static_cast<double>(m - r));
        const double coeff = sign * std::pow(2.0 * x, pw) / (fac(r) * fac(pw)) * gm /
                             std::tgamma(chalf + static_cast<double>(m - r));
        const Complex F = numerics::gauss_2f1({base + static_cast<double>(m - r),
                                               std::conj(base) + static_cast<double>(m - r),
                                               Complex(chalf + static_cast<double>(m - r)), z},
                                              opts);
        sum += coeff * F;
        sign = -sign;
    }
    const double front = (which == 1)
                             ? std::sqrt(kPi) * fac(m)
                             : std::sqrt(kPi) * fac(m + 1) / 4.0;
    const double mhalf = 0.5 * static_cast<double>(m);
    return front / abs_gamma_ix(lambda) * std::pow(1.0 + x * x, mhalf) * sum;
}

} // namespace

Complex legendre_p1(long m, double lambda, double x, const EvalOptions& opts) {
    require_lambda(lambda);
    if (m < 0) throw DomainError("legendre_p1: requires nonnegative integer m");
    return detail::ensure_finite(legendre_p_sum(1, m, lambda, x, opts), "legendre_p1");
}

Complex legendre_p2(long m, double lambda, double x, const EvalOptions& opts) {
    require_lambda(lambda);
    if (m < 0) throw DomainError("legendre_p2: requires nonnegative integer m");
    return detail::ensure_finite(legendre_p_sum(2, m, lambda, x, opts), "legendre_p2");
}

// ---- T/U radial functions via an exact derivative recurrence --------------
//
// Expressions are sums of c * S_s(x) * (1+x^2)^{j/2} * x^n with
// S_±(x) = (sqrt(1+x^2) ± x)^{i lambda}; the family is closed under d/dx
// because dS±/dx = ± i lambda S± / sqrt(1+x^2).

namespace {

using TuExpr = std::map<std::tuple<int, int, int>, Complex>;

TuExpr tu_derivative(const TuExpr& e, double lambda) {
    TuExpr out;
    for (const auto& [key, c] : e) {
        const auto [s, j, n] = key;
        out[{s, j - 1, n}] += c * Complex(0.0, s * lambda);
        if (j != 0) out[{s, j - 2, n + 1}] += c * static_cast<double>(j);
        if (n > 0) out[{s, j, n - 1}] += c * static_cast<double>(n);
    }
    return out;
}

Complex tu_eval(const TuExpr& e, double lambda, double x) {
    const double lu = std::log1p(x * x);
    const Complex sp = std::exp(kI * lambda * std::asinh(x));
    const Complex sm = 1.0 / sp;
    Complex v(0.0, 0.0);
    for (const auto& [key, c] : e) {
        const auto [s, j, n] = key;
        v += c * (s > 0 ? sp : sm) * std::exp(0.5 * j * lu) * std::pow(x, n);
    }
    return v;
}

Complex tu_function(int l, double lambda, double x, bool minus) {
    if (l < 0) throw DomainError("legendre_t/u: requires l >= 0");
    TuExpr e;
    e[{+1, -1, 0}] = Complex(1.0, 0.0);
    e[{-1, -1, 0}] = Complex(minus ? -1.0 : 1.0, 0.0);
    for (int i = 0; i < l; ++i) e = tu_derivative(e, lambda);
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    const double pref = std::exp(0.25 * (2.0 * l + 1.0) * std::log1p(x * x));
    return sign * pref * tu_eval(e, lambda, x);
}

double prod_half_weights(int l, double lambda) {
    double p = 1.0;
    for (int r = 1; r <= l; ++r) p *= std::sqrt(static_cast<double>(r) * r + lambda * lambda);
    return p;
}

} // namespace

Complex legendre_t(int l, double lambda, double x) {
    return detail::ensure_finite(tu_function(l, lambda, x, false), "legendre_t");
}

Complex legendre_u(int l, double lambda, double x) {
    return detail::ensure_finite(tu_function(l, lambda, x, true), "legendre_u");
}

Complex y_half(int seq, int l, double lambda, double tau, double phi, const EvalOptions&) {
    require_lambda(lambda);
    if (l < 0) throw DomainError("y_half: requires l >= 0 (weight m = l + 1/2)");
    if (seq != 1 && seq != 2) throw DomainError("y_half: sequence must be 1 or 2");
    const double mw = l + 0.5;
    const Complex ang = std::exp(kI * mw * phi);
    const double front = 1.0 / (2.0 * std::sqrt(2.0) * kPi * prod_half_weights(l, lambda));
    Complex out;
    if (seq == 1)
        out = front * ang * legendre_t(l, lambda, std::sinh(tau));
    else
        out = front / kI * ang * legendre_u(l, lambda, std::sinh(tau));
    return detail::ensure_finite(out, "y_half");
}

Complex y_principal_negative(int seq, double m, double lambda, double tau, double phi,
                             const EvalOptions& opts) {
    require_weight(m);
    if (!(m < 0.0)) throw DomainError("y_principal_negative: requires m < 0");
    const double mp = -m;
    if (is_integer(mp)) {
        const long mi = std::llround(mp);
        const double sign = (mi % 2 == 0) ? 1.0 : -1.0;
        return sign * std::conj(y_seq(seq, mi, lambda, tau, phi, opts));
    }
    const int l = static_cast<int>(std::llround(mp - 0.5));
    // (-1)^m continued to half-integers: e^{i pi (l + 1/2)} = (-1)^l i, exactly
    const Complex sign = (l % 2 == 0) ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
    return sign * std::conj(y_half(seq, l, lambda, tau, phi, opts));
}

Complex y_supplementary(const SupplementarySpec& spec, double tau, double phi,
                        const EvalOptions& opts) {
    spec.validate();
    const double g = spec.gamma;
    const double m = static_cast<double>(spec.m);
    const double sech_sq = std::exp(-2.0 * log_cosh(tau));
    const double z = std::tanh(tau) * std::tanh(tau);
    const Complex coshpow = std::exp(-(0.5 + g) * log_cosh(tau));
    Complex out;
    if (spec.parity == Parity::even) {
        const Complex F = numerics::gauss_2f1(
            {Complex(0.5 * (m + 0.5 + g)), Complex(0.5 * (-m + 0.5 + g)), Complex(0.5), z}, opts,
            sech_sq);
        out = std::exp(kI * m * phi) * coshpow * F;
    } else {
        const Complex F = numerics::gauss_2f1(
            {Complex(0.5 * (m + 1.5 + g)), Complex(0.5 * (-m + 1.5 + g)), Complex(1.5), z}, opts,
            sech_sq);
        out = std::exp(kI * m * phi) * coshpow * std::tanh(tau) * F;
    }
    return detail::ensure_finite(out, "y_supplementary");
}

double asymptotic_amplitude(Parity parity, double m, double lambda) {
    require_lambda(lambda);
    require_weight(m);
    const double gl = gamma_abs(-kI * lambda);
    if (parity == Parity::even) {
        const double d1 = gamma_abs(0.5 * (-m + 0.5 - kI * lambda));
        const double d2 = gamma_abs(0.5 * (m + 0.5 - kI * lambda));
        return std::sqrt(kPi) * gl / (d1 * d2);
    }
    const double d1 = gamma_abs(0.5 * (-m + 1.5 - kI * lambda));
    const double d2 = gamma_abs(0.5 * (m + 1.5 - kI * lambda));
    return 0.5 * std::sqrt(kPi) * gl / (d1 * d2);
}

SupplementaryCoeffs supplementary_coeffs(Parity parity, long m, double gamma) {
    if (!(gamma > 0.0 && gamma < 0.5))
        throw DomainError("supplementary series requires 0 < gamma < 1/2");
    const double md = static_cast<double>(m);
    const double shift = (parity == Parity::even) ? 0.5 : 1.5;
    const double front = (parity == Parity::even) ? std::sqrt(kPi) : 0.5 * std::sqrt(kPi);
    const double a1 = front * std::tgamma(-gamma) /
                      (std::tgamma(0.5 * (-md + shift - gamma)) *
                       std::tgamma(0.5 * (md + shift - gamma)));
    const double a2 = front * std::tgamma(gamma) /
                      (std::tgamma(0.5 * (md + shift + gamma)) *
                       std::tgamma(0.5 * (-md + shift + gamma)));
    return {a1, a2};
}

} // namespace hyperwave::continuous
