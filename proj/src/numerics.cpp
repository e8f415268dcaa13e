#include "numerics.hpp"

#include <array>
#include <cstdlib>

namespace hyperwave::numerics {

using detail::is_integer;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Bernoulli coefficients B_{2n}/(2n(2n-1)) of the Stirling series.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

bool nonpositive_integer(Complex z, long& n) {
    if (std::abs(z.imag()) > 1e-12) return false;
    const double r = std::round(z.real());
    if (r > 0.5 || std::abs(z.real() - r) > 1e-12) return false;
    n = static_cast<long>(-r);
    return true;
}

Complex stirling_log_gamma(Complex w) {
    const Complex lw = std::log(w);
    Complex s = (w - 0.5) * lw - w + 0.5 * std::log(2.0 * kPi);
    const Complex w2 = w * w;
    Complex p = w; // w^{2n-1}
    for (double cn : kStirling) {
        s += cn / p;
        p *= w2;
    }
    return s;
}

// Branch of log(sin(pi z)) analytic in the (closed) upper half-plane that
// makes the reflection formula yield the principal log-gamma.
Complex log_sin_pi_upper(Complex z) {
    const Complex i(0.0, 1.0);
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}), |e^{2 pi i z}| <= 1 above axis
    return std::log(0.5) + i * (kPi / 2.0) - i * kPi * z +
           std::log(1.0 - std::exp(2.0 * kPi * i * z));
}

} // namespace

Complex log_gamma_complex(Complex z) {
    long n;
    if (nonpositive_integer(z, n))
        throw PoleError("log_gamma_complex: pole of Gamma at z = -" + std::to_string(n));

    if (z.imag() < 0.0)
        return std::conj(log_gamma_complex(std::conj(z)));

    if (z.real() < 0.5) {
        // reflection, branch-corrected
        return std::log(kPi) - log_sin_pi_upper(z) - log_gamma_complex(1.0 - z);
    }

    Complex acc(0.0, 0.0);
    Complex w = z;
    while (std::abs(w) < 12.0) {
        acc += std::log(w);
        w += 1.0;
    }
    return stirling_log_gamma(w) - acc;
}

Complex gamma_complex(Complex z) {
    long n;
    if (nonpositive_integer(z, n))
        throw PoleError("gamma_complex: pole of Gamma at z = -" + std::to_string(n));
    return std::exp(log_gamma_complex(z));
}

double gamma_abs(Complex z) {
    return std::exp(log_gamma_complex(z).real());
}

double gamma_magnitude_sq(GammaMagKind kind, Complex arg) {
    switch (kind) {
    case GammaMagKind::half_plus_ix: {
        const double x = arg.real();
        const double px = kPi * std::abs(x);
        if (px > 30.0) return 2.0 * kPi * std::exp(-px);
        return kPi / std::cosh(px);
    }
    case GammaMagKind::ix: {
        const double x = arg.real();
        if (x == 0.0) throw PoleError("gamma_magnitude_sq: |Gamma(ix)| diverges at x = 0");
        const double px = kPi * std::abs(x);
        if (px > 30.0) return 2.0 * kPi * std::exp(-px) / std::abs(x);
        return kPi / (x * std::sinh(kPi * x)); // even in x
    }
    case GammaMagKind::general: {
        return std::exp(2.0 * log_gamma_complex(arg).real());
    }
    }
    throw DomainError("gamma_magnitude_sq: bad kind");
}

namespace {

// Direct power series with compensated summation. Requires |z| < 1 or a
// terminating parameter. `force_terms` > 0 sums exactly that many terms.
Complex series_2f1(Complex a, Complex b, Complex c, double z, double tol,
                   long max_terms, long force_terms) {
    Complex sum(1.0, 0.0), comp(0.0, 0.0);
    Complex term(1.0, 0.0);
    int small_run = 0;
    const long cap = force_terms > 0 ? force_terms : max_terms;
    for (long n = 0; n < cap; ++n) {
        const Complex dn = (c + static_cast<double>(n)) * static_cast<double>(n + 1);
        term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) * z / dn;
        // Kahan step
        const Complex y = term - comp;
        const Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (force_terms > 0) continue;
        if (std::abs(term) <= tol * std::max(std::abs(sum), 1e-300)) {
            if (++small_run >= 3) return sum;
        } else {
            small_run = 0;
        }
    }
    if (force_terms > 0) return sum;
    throw ConvergenceError("gauss_2f1: series tail bound not met within max terms");
}

// Gamma(n1)Gamma(n2)/(Gamma(d1)Gamma(d2)); a pole in the denominator gives 0,
// a pole in the numerator is reported for the caller to handle.
Complex gamma_ratio_22(Complex n1, Complex n2, Complex d1, Complex d2, bool& numerator_pole) {
    long dummy;
    numerator_pole = nonpositive_integer(n1, dummy) || nonpositive_integer(n2, dummy);
    if (numerator_pole) return {0.0, 0.0};
    if (nonpositive_integer(d1, dummy) || nonpositive_integer(d2, dummy)) return {0.0, 0.0};
    return std::exp(log_gamma_complex(n1) + log_gamma_complex(n2) -
                    log_gamma_complex(d1) - log_gamma_complex(d2));
}

Complex eval_2f1(Complex a, Complex b, Complex c, double z, const EvalOptions& opts,
                 std::optional<double> one_minus_z) {
    // z may round to 1 while the caller-supplied 1-z is still positive
    if (z >= 1.0 && !(one_minus_z && *one_minus_z > 0.0))
        throw DomainError("gauss_2f1: argument z must satisfy z < 1");

    // terminating series: a or b a non-positive integer
    long na = -1, nb = -1, terms = -1, cpole;
    const bool ta = nonpositive_integer(a, na);
    const bool tb = nonpositive_integer(b, nb);
    if (ta) terms = na + 1;
    if (tb) terms = (terms < 0) ? nb + 1 : std::min(terms, nb + 1);
    if (nonpositive_integer(c, cpole)) {
        if (terms < 0 || terms > cpole)
            throw PoleError("gauss_2f1: parameter c is a non-positive integer and the "
                            "series does not terminate before the pole");
    }
    const long max_terms = EvalOptions::max_terms();
    if (terms > 0)
        return series_2f1(a, b, c, z, opts.series_tol, max_terms, terms);

    if (z == 0.0) return {1.0, 0.0};

    const double thr = opts.transform_threshold;
    if (z <= -thr) {
        // Pfaff z -> z/(z-1) keeps the argument in (0,1)
        const double w = z / (z - 1.0);
        const Complex pref = std::exp(-a * std::log(1.0 - z));
        return pref * eval_2f1(a, c - b, c, w, opts, std::nullopt);
    }
    if (z <= thr)
        return series_2f1(a, b, c, z, opts.series_tol, max_terms, 0);

    // threshold < z < 1: continuation in 1-z
    const Complex cab = c - a - b;
    if (is_integer(cab.real(), 1e-9) && std::abs(cab.imag()) < 1e-9) {
        // degenerate continuation; the direct series still converges for z < 1
        return series_2f1(a, b, c, z, opts.series_tol, max_terms, 0);
    }
    const double u = one_minus_z ? *one_minus_z : 1.0 - z;
    bool pole1 = false, pole2 = false;
    const Complex a1 = gamma_ratio_22(c, cab, c - a, c - b, pole1);
    const Complex a2 = gamma_ratio_22(c, -cab, a, b, pole2);
    if (pole1 || pole2)
        throw PoleError("gauss_2f1: continuation coefficient hits a Gamma pole");
    Complex out(0.0, 0.0);
    if (a1 != Complex(0.0, 0.0))
        out += a1 * eval_2f1(a, b, a + b - c + 1.0, u, opts, std::nullopt);
    if (a2 != Complex(0.0, 0.0))
        out += a2 * std::exp(cab * std::log(u)) *
               eval_2f1(c - a, c - b, cab + 1.0, u, opts, std::nullopt);
    return out;
}

} // namespace

Complex gauss_2f1(const Hyp2F1Params& p, const EvalOptions& opts,
                  std::optional<double> one_minus_z) {
    opts.validate();
    return detail::ensure_finite(eval_2f1(p.a, p.b, p.c, p.z, opts, one_minus_z), "gauss_2f1");
}

Complex gauss_2f1_deriv(const Hyp2F1Params& p, int n, const EvalOptions& opts) {
    if (n < 0) throw DomainError("gauss_2f1_deriv: order must be non-negative");
    Complex factor(1.0, 0.0);
    long dummy;
    for (int j = 0; j < n; ++j) {
        const Complex cj = p.c + static_cast<double>(j);
        if (nonpositive_integer(cj, dummy))
            throw PoleError("gauss_2f1_deriv: shifted parameter c+j hits a pole");
        factor *= (p.a + static_cast<double>(j)) * (p.b + static_cast<double>(j)) / cj;
    }
    Hyp2F1Params q{p.a + static_cast<double>(n), p.b + static_cast<double>(n),
                   p.c + static_cast<double>(n), p.z};
    return factor * gauss_2f1(q, opts);
}

double generalized_double_factorial_ratio(double k) {
    if (!(k > -0.5))
        throw DomainError("generalized_double_factorial_ratio: requires k > -1/2");
    return std::exp(std::lgamma(k + 0.5) - std::lgamma(k + 1.0)) / std::sqrt(kPi);
}

} // namespace hyperwave::numerics
