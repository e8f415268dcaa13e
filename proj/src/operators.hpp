#ifndef HYPERWAVE_OPERATORS_HPP
#define HYPERWAVE_OPERATORS_HPP

#include <functional>
#include <string>

#include "core.hpp"

namespace hyperwave::operators {

/// A function on the hyperboloid handed to the difference operators.
/// `weight_m`, when set, declares the exact e^{im phi} factor so phi
/// derivatives are taken analytically. `decay_power` declares
/// |f(tau,.)| = O(cosh^{-p} tau) and feeds the quadrature tail bound;
/// leave it empty for non-decaying functions and truncate explicitly.
struct SurfaceFunction {
    std::function<Complex(double, double)> eval;
    std::optional<double> weight_m;
    std::optional<double> decay_power;

    Complex operator()(double tau, double phi) const { return eval(tau, phi); }
};

/// Outcome of a single invariant check.
struct VerifyReport {
    std::string name;
    Complex expected{0.0, 0.0};
    Complex observed{0.0, 0.0};
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

VerifyReport make_report(std::string name, Complex expected, Complex observed,
                         double residual, double tolerance);

/// K3 = -i d/dphi.
Complex apply_k3(const SurfaceFunction& f, double tau, double phi, const EvalOptions& opts);

/// K+ = -e^{i phi} (d/dtau + i tanh(tau) d/dphi).
Complex apply_kplus(const SurfaceFunction& f, double tau, double phi, const EvalOptions& opts);

/// K- = e^{-i phi} (d/dtau - i tanh(tau) d/dphi).
Complex apply_kminus(const SurfaceFunction& f, double tau, double phi, const EvalOptions& opts);

/// C2 = d^2/dtau^2 + tanh(tau) d/dtau - sech^2(tau) d^2/dphi^2.
/// Second derivatives use a 10x wider step than first derivatives.
Complex apply_casimir(const SurfaceFunction& f, double tau, double phi, const EvalOptions& opts);

/// <f,g> = int cosh(tau) dtau int dphi f^* g over |tau| <= quad_cutoff.
/// With both weights declared the phi integral is 2 pi delta_{m m'}.
Complex inner_product(const SurfaceFunction& f, const SurfaceFunction& g,
                      const EvalOptions& opts);

/// Adaptive Simpson on [a,b] (exposed for the quadrature-based checks).
Complex integrate_adaptive(const std::function<Complex(double)>& fn, double a, double b,
                           double tol);

} // namespace hyperwave::operators

#endif
