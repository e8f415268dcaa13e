#include "operators.hpp"

#include <cmath>

namespace hyperwave::operators {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const Complex kI(0.0, 1.0);

void check_step(double tau, double h) {
    if (!(h > 0.0) || tau + h == tau || tau - h == tau)
        throw DomainError("operators: fd_step underflows at this point");
}

Complex d_tau(const SurfaceFunction& f, double tau, double phi, double h) {
    check_step(tau, h);
    return (f(tau + h, phi) - f(tau - h, phi)) / (2.0 * h);
}

Complex d2_tau(const SurfaceFunction& f, double tau, double phi, double h) {
    check_step(tau, h);
    return (f(tau + h, phi) - 2.0 * f(tau, phi) + f(tau - h, phi)) / (h * h);
}

Complex d_phi(const SurfaceFunction& f, double tau, double phi, double h) {
    if (f.weight_m) return kI * (*f.weight_m) * f(tau, phi);
    check_step(phi, h);
    return (f(tau, phi + h) - f(tau, phi - h)) / (2.0 * h);
}

Complex d2_phi(const SurfaceFunction& f, double tau, double phi, double h) {
    if (f.weight_m) return -(*f.weight_m) * (*f.weight_m) * f(tau, phi);
    check_step(phi, h);
    return (f(tau, phi + h) - 2.0 * f(tau, phi) + f(tau, phi - h)) / (h * h);
}

// 2pi-periodic trapezoid; exact for trigonometric polynomials below degree n.
Complex phi_average(const std::function<Complex(double)>& fn, int n = 64) {
    Complex s(0.0, 0.0);
    for (int j = 0; j < n; ++j) s += fn(2.0 * kPi * j / n);
    return s * (2.0 * kPi / n);
}

Complex simpson(double a, double b, Complex fa, Complex fm, Complex fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

Complex adapt(const std::function<Complex(double)>& fn, double a, double m, double b,
              Complex fa, Complex fm, Complex fb, Complex whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const Complex flm = fn(lm), frm = fn(rm);
    const Complex left = simpson(a, m, fa, flm, fm);
    const Complex right = simpson(m, b, fm, frm, fb);
    const Complex delta = left + right - whole;
    // machine-relative floor keeps huge integrands from refining forever
    const double accept = std::max(15.0 * tol, 1e-14 * std::abs(left + right));
    if (depth <= 0 || std::abs(delta) <= accept)
        return left + right + delta / 15.0;
    return adapt(fn, a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adapt(fn, m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace

Complex integrate_adaptive(const std::function<Complex(double)>& fn, double a, double b,
                           double tol) {
    if (a == b) return {0.0, 0.0};
    // seed panels no wider than the cosh scale so localized integrands
    // cannot slip between the coarse sample points
    const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / 2.0)));
    const double ptol = tol / panels;
    Complex total(0.0, 0.0);
    for (int i = 0; i < panels; ++i) {
        const double pa = a + (b - a) * static_cast<double>(i) / panels;
        const double pb = a + (b - a) * static_cast<double>(i + 1) / panels;
        const double m = 0.5 * (pa + pb);
        const Complex fa = fn(pa), fm = fn(m), fb = fn(pb);
        const Complex whole = simpson(pa, pb, fa, fm, fb);
        total += adapt(fn, pa, m, pb, fa, fm, fb, whole, ptol, 30);
    }
    return total;
}

VerifyReport make_report(std::string name, Complex expected, Complex observed,
                         double residual, double tolerance) {
    VerifyReport r;
    r.name = std::move(name);
    r.expected = expected;
    r.observed = observed;
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    return r;
}

Complex apply_k3(const SurfaceFunction& f, double tau, double phi, const EvalOptions& opts) {
    return -kI * d_phi(f, tau, phi, opts.fd_step);
}

Complex apply_kplus(const SurfaceFunction& f, double tau, double phi, const EvalOptions& opts) {
    const double h = opts.fd_step;
    return -std::exp(kI * phi) *
           (d_tau(f, tau, phi, h) + kI * std::tanh(tau) * d_phi(f, tau, phi, h));
}

Complex apply_kminus(const SurfaceFunction& f, double tau, double phi, const EvalOptions& opts) {
    const double h = opts.fd_step;
    return std::exp(-kI * phi) *
           (d_tau(f, tau, phi, h) - kI * std::tanh(tau) * d_phi(f, tau, phi, h));
}

Complex apply_casimir(const SurfaceFunction& f, double tau, double phi, const EvalOptions& opts) {
    const double h1 = opts.fd_step;
    const double h2 = 10.0 * opts.fd_step;
    const double sech = 1.0 / std::cosh(tau);
    return d2_tau(f, tau, phi, h2) + std::tanh(tau) * d_tau(f, tau, phi, h1) -
           sech * sech * d2_phi(f, tau, phi, h2);
}

Complex inner_product(const SurfaceFunction& f, const SurfaceFunction& g,
                      const EvalOptions& opts) {
    opts.validate();
    const double T = opts.quad_cutoff;

    std::function<Complex(double)> radial;
    double phi_factor_abs = 2.0 * kPi;
    if (f.weight_m && g.weight_m) {
        const double dm = *g.weight_m - *f.weight_m;
        if (dm != 0.0) return {0.0, 0.0}; // 2 pi delta_{m m'}
        radial = [&](double t) { return std::cosh(t) * std::conj(f(t, 0.0)) * g(t, 0.0); };
    } else {
        radial = [&](double t) {
            const Complex avg = phi_average([&](double p) { return std::conj(f(t, p)) * g(t, p); });
            return std::cosh(t) * avg;
        };
        phi_factor_abs = 1.0; // already folded into the average
    }

    // analytic tail bound from declared cosh-power decay
    if (f.decay_power && g.decay_power) {
        const double P = *f.decay_power + *g.decay_power - 1.0; // integrand ~ cosh^{-P}
        if (P <= 0.0)
            throw ConvergenceError("inner_product: integrand does not decay; "
                                   "norm diverges with the cutoff");
        const double edge = std::abs(radial(T)) + std::abs(radial(-T));
        const double tail = phi_factor_abs * edge / P;
        if (tail > opts.quad_tol)
            throw ConvergenceError("inner_product: quadrature tail bound exceeds quad_tol");
    }

    const Complex core = integrate_adaptive(radial, -T, T, opts.quad_tol / 4.0);
    if (f.weight_m && g.weight_m) return 2.0 * kPi * core;
    return core;
}

} // namespace hyperwave::operators
