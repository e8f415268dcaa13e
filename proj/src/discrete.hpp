#ifndef HYPERWAVE_DISCRETE_HPP
#define HYPERWAVE_DISCRETE_HPP

#include "core.hpp"

namespace hyperwave::discrete {

enum class Series { d_plus, d_minus };

/// Index pair of a discrete-series function. k runs over -1/2, 0, 1/2, 1, ...
/// with m >= k+1 (D+) or m <= -(k+1) (D-) and m-k integer.
struct DiscreteSpec {
    double k = 0.0;
    double m = 1.0;
    Series series = Series::d_plus;

    void validate() const; // throws DomainError naming the violated constraint
};

/// c_k of the lowest-weight function, continued to half-integer k.
double lowest_weight_norm(double k);

/// Legendre-type function P^m_k(x) by its closed finite sum.
double assoc_p(double k, double m, double x, const EvalOptions& opts);

/// P, dP/dx, d2P/dx2 differentiated term by term (exact, no finite differences).
struct AssocPDerivs {
    double p;
    double dp;
    double d2p;
};
AssocPDerivs assoc_p_derivs(double k, double m, double x, const EvalOptions& opts);

/// Normalized Y^m_k of the raising-operator (sum-form) route.
Complex y_dplus(double k, double m, double tau, double phi, const EvalOptions& opts);

/// Same function through the hypergeometric closed forms; kept separate so the
/// two routes can be cross-tested.
Complex y_dplus_hypergeometric(double k, double m, double tau, double phi,
                               const EvalOptions& opts);

/// Lowering-series function Ytilde^m_k, m <= -(k+1).
Complex y_dminus(double k, double m, double tau, double phi, const EvalOptions& opts);

/// Volume function p^m_k = a^k Y^m_k, a > 0.
Complex volume_function(double k, double m, double a, double tau, double phi,
                        const EvalOptions& opts);

enum class Recurrence { a1, a2, a3, a4, a5, a6 };

/// |LHS - RHS| of the chosen P^m_k recurrence at x (derivatives analytic).
double recurrence_residual(Recurrence id, double k, double m, double x,
                           const EvalOptions& opts);

/// Largest term magnitude of the recurrence at (k,m,x); residual scale.
double recurrence_scale(Recurrence id, double k, double m, double x,
                        const EvalOptions& opts);

} // namespace hyperwave::discrete

#endif
