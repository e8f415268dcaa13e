#ifndef HYPERWAVE_CONTINUOUS_HPP
#define HYPERWAVE_CONTINUOUS_HPP

#include "core.hpp"

namespace hyperwave::continuous {

enum class Parity { even, odd };

/// Principal-series label: k = -1/2 + i lambda, lambda > 0; m integer or
/// half-integer of either sign (2m integral).
struct PrincipalSpec {
    double lambda = 1.0;
    double m = 0.0;
    enum class Kind { seq1, seq2, even_raw, odd_raw } kind = Kind::seq1;

    void validate() const;
};

/// Supplementary-series label: k = gamma - 1/2 with 0 < gamma < 1/2.
struct SupplementarySpec {
    double gamma = 0.25;
    long m = 0;
    Parity parity = Parity::even;

    void validate() const;
};

/// |c-hat_{m lambda}| and |c-bar_{m lambda}| normalization moduli.
double norm_even(double m, double lambda);
double norm_odd(double m, double lambda);

/// Vacuum-generated phases of the even/odd functions, nonnegative integer m.
double phase_even(long m);
double phase_odd(long m);

/// Fully normalized even/odd function (modulus and phase included).
Complex y_principal_raw(Parity parity, double m, double lambda, double tau, double phi,
                        const EvalOptions& opts);

/// Ladder-sequence members by their explicit finite sums; m >= 0 integer.
Complex y_seq(int seq, long m, double lambda, double tau, double phi,
              const EvalOptions& opts);

/// 1 / prod_{r=1}^m sqrt(((2r-1)/2)^2 + lambda^2).
double z_factor(long m, double lambda);

/// Gamma-ratio forms of the same product (both identities).
double z_factor_gamma_a(long m, double lambda);
double z_factor_gamma_b(long m, double lambda);

/// Legendre-type radial functions of the two sequences, m >= 0 integer.
Complex legendre_p1(long m, double lambda, double x, const EvalOptions& opts);
Complex legendre_p2(long m, double lambda, double x, const EvalOptions& opts);

/// Half-integer weight members, m = l + 1/2, through the closed derivative forms.
Complex y_half(int seq, int l, double lambda, double tau, double phi,
               const EvalOptions& opts);

/// T^l_lambda / U^l_lambda radial functions (exact coefficient recurrence,
/// no numerical differentiation).
Complex legendre_t(int l, double lambda, double x);
Complex legendre_u(int l, double lambda, double x);

/// Negative weights by the conjugation law; m < 0, integer or half-integer.
Complex y_principal_negative(int seq, double m, double lambda, double tau, double phi,
                             const EvalOptions& opts);

/// Supplementary-series function, normalization constant fixed to 1.
Complex y_supplementary(const SupplementarySpec& spec, double tau, double phi,
                        const EvalOptions& opts);

/// |A1| of the large-tau envelope (even: A-hat_1, odd: A-bar_1).
double asymptotic_amplitude(Parity parity, double m, double lambda);

/// Real continuation coefficients (A1, A2) of the supplementary series.
struct SupplementaryCoeffs {
    double a1;
    double a2;
};
SupplementaryCoeffs supplementary_coeffs(Parity parity, long m, double gamma);

} // namespace hyperwave::continuous

#endif
