#ifndef HYPERWAVE_NUMERICS_HPP
#define HYPERWAVE_NUMERICS_HPP

#include "core.hpp"

namespace hyperwave::numerics {

/// Parameters of the Gauss hypergeometric function 2F1(a,b;c;z), real z < 1.
struct Hyp2F1Params {
    Complex a;
    Complex b;
    Complex c;
    double z = 0.0;
};

enum class GammaMagKind { half_plus_ix, ix, general };

/// Principal-branch log Gamma. Throws PoleError at non-positive integers.
Complex log_gamma_complex(Complex z);

/// Gamma via exp(log_gamma_complex).
Complex gamma_complex(Complex z);

/// |Gamma(.)|^2. half_plus_ix and ix take the real x; general takes z.
double gamma_magnitude_sq(GammaMagKind kind, Complex arg);

/// |Gamma(z)| for complex z (log-gamma route).
double gamma_abs(Complex z);

/// 2F1(a,b;c;z). Terminating series summed exactly; |z| <= threshold by
/// direct series; threshold < z < 1 through the 1-z continuation; z < -threshold
/// through the Pfaff map z -> z/(z-1). `one_minus_z`, when supplied, is used
/// instead of recomputing 1-z (callers that know sech^2 tau pass it).
Complex gauss_2f1(const Hyp2F1Params& p, const EvalOptions& opts,
                  std::optional<double> one_minus_z = std::nullopt);

/// n-th derivative of 2F1 with respect to z via the parameter-shift formula.
Complex gauss_2f1_deriv(const Hyp2F1Params& p, int n, const EvalOptions& opts);

/// (2k-1)!!/(2k)!! continued in k through Gamma(k+1/2)/(sqrt(pi) Gamma(k+1)),
/// k > -1/2. Equals (2/pi) * integral_0^inf sech^{2k+1}.
double generalized_double_factorial_ratio(double k);

} // namespace hyperwave::numerics

#endif
