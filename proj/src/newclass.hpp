#ifndef HYPERWAVE_NEWCLASS_HPP
#define HYPERWAVE_NEWCLASS_HPP

#include "core.hpp"

namespace hyperwave::newclass {

/// Y^k_k / Ytilde^{-k}_k family: integer k >= 0, free constants (alpha, beta),
/// sign selects the weight +k or -k.
struct NewClassSpec {
    int k = 0;
    double alpha = 0.0;
    double beta = 1.0;
    int sign = +1; // +1: weight +k, -1: weight -k

    void validate() const;
};

/// g_k(x) on (-1,1): (1-x^2)^{-k/2} [alpha + beta * antiderivative].
double g_k(const NewClassSpec& spec, double x);

/// Radial factor f^k_k(tau) = g_k(tanh tau), evaluated in tau directly so
/// large |tau| stays stable (arcsin(tanh tau) via 2 atan e^tau - pi/2).
double radial(const NewClassSpec& spec, double tau);

/// Stable arcsin(tanh tau) used by the radial evaluator.
double arcsin_tanh(double tau);

Complex y_newclass(const NewClassSpec& spec, double tau, double phi);

/// Finite-difference residual of the m=k radial equation.
double ode_residual(const NewClassSpec& spec, double tau, const EvalOptions& opts);

} // namespace hyperwave::newclass

#endif
