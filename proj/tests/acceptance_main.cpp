// Acceptance suite: every release criterion with its pinned tolerance,
// one PASS/FAIL line each. Exit code is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "continuous.hpp"
#include "discrete.hpp"
#include "newclass.hpp"
#include "numerics.hpp"
#include "operators.hpp"
#include "verify.hpp"

using namespace hyperwave;
using continuous::Parity;
using operators::SurfaceFunction;

namespace {

const EvalOptions opts{};
const Complex I(0.0, 1.0);
constexpr double pi = 3.14159265358979323846;

struct Criterion {
    int worst_count = 0;
    double worst = 0.0;
    std::string worst_what;
    bool ok = true;

    void check(double resid, double tol, const std::string& what) {
        ++worst_count;
        if (resid > worst) {
            worst = resid;
            worst_what = what;
        }
        if (!(resid <= tol)) ok = false;
    }
};

double rel(Complex obs, Complex exp) {
    return std::abs(obs - exp) / std::max({1e-30, std::abs(obs), std::abs(exp)});
}

SurfaceFunction fn(std::function<Complex(double, double)> f) {
    SurfaceFunction s;
    s.eval = std::move(f);
    return s;
}

// ---- criterion 1: lowest-weight normalization constants --------------------
Criterion criterion_norms() {
    Criterion c;
    long double oddf = 1.0L, evenf = 1.0L;
    for (int k = 0; k <= 6; ++k) {
        if (k > 0) {
            oddf *= 2 * k - 1;
            evenf *= 2 * k;
        }
        const double expect =
            static_cast<double>(std::sqrt(evenf / oddf) / (std::sqrt(2.0L) * pi));
        const double got = discrete::lowest_weight_norm(k);
        c.check(std::abs(got - expect) / expect, 1e-14, "c_" + std::to_string(k));
    }
    return c;
}

// ---- criterion 2: orthonormality -------------------------------------------
Criterion criterion_orthonormality() {
    Criterion c;
    struct Fn {
        double k, m;
    };
    std::vector<Fn> fns;
    for (double k : {0.0, 0.5, 1.0, 2.0})
        for (int d = 1; d <= 2; ++d) fns.push_back({k, k + d});
    for (size_t i = 0; i < fns.size(); ++i) {
        for (size_t j = i; j < fns.size(); ++j) {
            SurfaceFunction f = fn([=](double t, double p) {
                return discrete::y_dplus(fns[i].k, fns[i].m, t, p, opts);
            });
            f.weight_m = fns[i].m;
            f.decay_power = fns[i].k + 1.0;
            SurfaceFunction g = fn([=](double t, double p) {
                return discrete::y_dplus(fns[j].k, fns[j].m, t, p, opts);
            });
            g.weight_m = fns[j].m;
            g.decay_power = fns[j].k + 1.0;
            const Complex ip = operators::inner_product(f, g, opts);
            const double expect = (i == j) ? 1.0 : 0.0;
            char buf[64];
            std::snprintf(buf, sizeof buf, "<k=%g m=%g|k=%g m=%g>", fns[i].k, fns[i].m,
                          fns[j].k, fns[j].m);
            c.check(std::abs(ip - expect), 1e-7, buf);
        }
    }
    return c;
}

// ---- criterion 3: eigenvalue suite ------------------------------------------
Criterion criterion_eigen() {
    Criterion c;
    EvalOptions eig = opts;
    eig.fd_step = 1e-5;
    std::mt19937 rng(2468);
    std::uniform_real_distribution<double> ts(-2.0, 2.0), ps(0.0, 2.0 * pi);

    // residuals scaled by the function magnitude so the unnormalized families
    // are judged on the same footing as the unit-norm ones
    auto run = [&](const SurfaceFunction& f, Complex kk1, double m, const std::string& what) {
        for (int i = 0; i < 20; ++i) {
            const double tau = ts(rng), phi = ps(rng);
            const Complex v = f(tau, phi);
            const double scale = std::max(1.0, std::abs(v));
            const Complex c2 = operators::apply_casimir(f, tau, phi, eig);
            c.check(std::abs(c2 - kk1 * v) / scale, 1e-4, what + " casimir");
            const Complex k3 = operators::apply_k3(f, tau, phi, eig);
            c.check(std::abs(k3 - m * v) / scale, 1e-8, what + " k3");
        }
    };

    for (double k : {0.0, 0.5, 1.0, 2.0}) {
        for (int d = 1; d <= 3; ++d) {
            const double m = k + d;
            run(fn([=](double t, double p) { return discrete::y_dplus(k, m, t, p, opts); }),
                k * (k + 1.0), m, "dplus");
            run(fn([=](double t, double p) { return discrete::y_dminus(k, -m, t, p, opts); }),
                k * (k + 1.0), -m, "dminus");
        }
    }
    for (double lam : {0.7, 1.3}) {
        const Complex kk1(-0.25 - lam * lam);
        for (int seq : {1, 2}) {
            for (long m = 0; m <= 3; ++m)
                run(fn([=](double t, double p) {
                        return continuous::y_seq(seq, m, lam, t, p, opts);
                    }),
                    kk1, static_cast<double>(m), "principal");
            for (int l = 0; l <= 3; ++l) // weights up to 7/2
                run(fn([=](double t, double p) {
                        return continuous::y_half(seq, l, lam, t, p, opts);
                    }),
                    kk1, l + 0.5, "half");
        }
    }
    for (double g : {0.1, 0.25, 0.4}) {
        const double kk = g - 0.5;
        for (long m = 0; m <= 2; ++m) {
            for (auto parity : {Parity::even, Parity::odd}) {
                continuous::SupplementarySpec s{g, m, parity};
                run(fn([=](double t, double p) {
                        return continuous::y_supplementary(s, t, p, opts);
                    }),
                    kk * (kk + 1.0), static_cast<double>(m), "supplementary");
            }
        }
    }
    for (int k : {0, 1, 2, 3}) {
        for (auto [al, be] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}}) {
            for (int sign : {+1, -1}) {
                newclass::NewClassSpec s{k, al, be, sign};
                run(fn([=](double t, double p) { return newclass::y_newclass(s, t, p); }),
                    static_cast<double>(k) * (k + 1.0), static_cast<double>(sign * k),
                    "newclass");
            }
        }
    }
    return c;
}

// ---- criterion 4: ladder suite ----------------------------------------------
Criterion criterion_ladder() {
    Criterion c;
    std::mt19937 rng(1357);
    std::uniform_real_distribution<double> ts(-2.0, 2.0), ps(0.0, 2.0 * pi);

    for (double k : {0.0, 0.5, 1.0, 2.0}) {
        for (int d = 1; d <= 3; ++d) {
            const double m = k + d;
            const SurfaceFunction f =
                fn([=](double t, double p) { return discrete::y_dplus(k, m, t, p, opts); });
            for (int i = 0; i < 5; ++i) {
                const double tau = ts(rng), phi = ps(rng);
                const Complex up = operators::apply_kplus(f, tau, phi, opts);
                const Complex expect = std::sqrt((m - k) * (m + k + 1.0)) *
                                       discrete::y_dplus(k, m + 1.0, tau, phi, opts);
                c.check(rel(up, expect), 1e-4, "dplus raise");
                if (d >= 2) {
                    const Complex dn = operators::apply_kminus(f, tau, phi, opts);
                    const Complex exp2 = std::sqrt((m + k) * (m - k - 1.0)) *
                                         discrete::y_dplus(k, m - 1.0, tau, phi, opts);
                    c.check(rel(dn, exp2), 1e-4, "dplus lower");
                    const SurfaceFunction g = fn([=](double t, double p) {
                        return discrete::y_dminus(k, -m, t, p, opts);
                    });
                    const Complex dn2 = operators::apply_kminus(g, tau, phi, opts);
                    const Complex exp3 = std::sqrt((-m + k) * (-m - k - 1.0)) *
                                         discrete::y_dminus(k, -m - 1.0, tau, phi, opts);
                    c.check(rel(dn2, exp3), 1e-4, "dminus lower");
                }
            }
        }
        // annihilation of the extremal weights
        const SurfaceFunction low =
            fn([=](double t, double p) { return discrete::y_dplus(k, k + 1.0, t, p, opts); });
        const SurfaceFunction high = fn(
            [=](double t, double p) { return discrete::y_dminus(k, -(k + 1.0), t, p, opts); });
        for (int i = 0; i < 5; ++i) {
            const double tau = ts(rng), phi = ps(rng);
            c.check(std::abs(operators::apply_kminus(low, tau, phi, opts)), 1e-6,
                    "annihilate low");
            c.check(std::abs(operators::apply_kplus(high, tau, phi, opts)), 1e-6,
                    "annihilate high");
        }
    }

    for (double lam : {0.7, 1.3}) {
        for (int seq : {1, 2}) {
            for (long m = 0; m <= 3; ++m) {
                const SurfaceFunction f = fn([=](double t, double p) {
                    return continuous::y_seq(seq, m, lam, t, p, opts);
                });
                for (int i = 0; i < 5; ++i) {
                    const double tau = ts(rng), phi = ps(rng);
                    const Complex up = operators::apply_kplus(f, tau, phi, opts);
                    const double cu = std::sqrt((m + 0.5) * (m + 0.5) + lam * lam);
                    c.check(rel(up, cu * continuous::y_seq(seq, m + 1, lam, tau, phi, opts)),
                            1e-4, "principal raise");
                    const Complex dn = operators::apply_kminus(f, tau, phi, opts);
                    const double cd = std::sqrt((m - 0.5) * (m - 0.5) + lam * lam);
                    const Complex prev =
                        m == 0 ? continuous::y_principal_negative(seq, -1.0, lam, tau, phi,
                                                                  opts)
                               : continuous::y_seq(seq, m - 1, lam, tau, phi, opts);
                    c.check(rel(dn, cd * prev), 1e-4, "principal lower");
                }
            }
            for (int l = 0; l <= 2; ++l) {
                const SurfaceFunction f = fn([=](double t, double p) {
                    return continuous::y_half(seq, l, lam, t, p, opts);
                });
                for (int i = 0; i < 5; ++i) {
                    const double tau = ts(rng), phi = ps(rng);
                    const Complex up = operators::apply_kplus(f, tau, phi, opts);
                    const double cu = std::sqrt((l + 1.0) * (l + 1.0) + lam * lam);
                    c.check(rel(up, cu * continuous::y_half(seq, l + 1, lam, tau, phi, opts)),
                            1e-4, "half raise");
                    if (l >= 1) {
                        const Complex dn = operators::apply_kminus(f, tau, phi, opts);
                        const double cd = std::sqrt(static_cast<double>(l) * l + lam * lam);
                        c.check(
                            rel(dn, cd * continuous::y_half(seq, l - 1, lam, tau, phi, opts)),
                            1e-4, "half lower");
                    }
                }
            }
        }
    }
    return c;
}

// ---- criterion 5: route equivalence ------------------------------------------
Criterion criterion_routes() {
    Criterion c;
    std::mt19937 rng(8642);
    std::uniform_real_distribution<double> ts(-3.0, 3.0), ps(0.0, 2.0 * pi);

    for (double k : {0.0, 0.5, 1.0, 2.0}) {
        for (int d = 1; d <= 3; ++d) {
            const double m = k + d;
            for (int i = 0; i < 8; ++i) {
                const double tau = ts(rng), phi = ps(rng);
                c.check(rel(discrete::y_dplus(k, m, tau, phi, opts),
                            discrete::y_dplus_hypergeometric(k, m, tau, phi, opts)),
                        1e-9, "dplus sum vs hyp");
            }
            // ladder-generated: one and two finite-difference raises
            const SurfaceFunction f =
                fn([=](double t, double p) { return discrete::y_dplus(k, m, t, p, opts); });
            const double tau = 0.4 * d - 1.0, phi = 0.9;
            const Complex one = operators::apply_kplus(f, tau, phi, opts) /
                                std::sqrt((m - k) * (m + k + 1.0));
            c.check(rel(one, discrete::y_dplus_hypergeometric(k, m + 1.0, tau, phi, opts)),
                    1e-4, "dplus fd-ladder 1");
            EvalOptions nested = opts;
            nested.fd_step = 1e-3;
            const SurfaceFunction kf = fn(
                [=](double t, double p) { return operators::apply_kplus(f, t, p, nested); });
            const Complex two =
                operators::apply_kplus(kf, tau, phi, nested) /
                (std::sqrt((m - k) * (m + k + 1.0)) * std::sqrt((m + 1 - k) * (m + k + 2.0)));
            c.check(rel(two, discrete::y_dplus(k, m + 2.0, tau, phi, opts)), 1e-4,
                    "dplus fd-ladder 2");
        }
    }

    for (double lam : {0.7, 1.3, 2.8}) {
        for (long m = 0; m <= 5; ++m) {
            for (int i = 0; i < 6; ++i) {
                const double tau = ts(rng), phi = ps(rng);
                const Complex y1 = continuous::y_seq(1, m, lam, tau, phi, opts);
                const Complex r1 = continuous::y_principal_raw(
                    m % 2 == 0 ? Parity::even : Parity::odd, static_cast<double>(m), lam, tau,
                    phi, opts);
                c.check(rel(y1, r1), 1e-9, "seq1 vs raw");
                const Complex y2 = continuous::y_seq(2, m, lam, tau, phi, opts);
                const Complex r2 = continuous::y_principal_raw(
                    m % 2 == 0 ? Parity::odd : Parity::even, static_cast<double>(m), lam, tau,
                    phi, opts);
                c.check(rel(y2, r2), 1e-9, "seq2 vs raw");
            }
        }
        // fd ladder from the vacua
        for (int seq : {1, 2}) {
            const SurfaceFunction vac =
                fn([=](double t, double p) { return continuous::y_seq(seq, 0, lam, t, p, opts); });
            const double tau = 0.5, phi = 0.3;
            const Complex one = operators::apply_kplus(vac, tau, phi, opts) /
                                std::sqrt(0.25 + lam * lam);
            c.check(rel(one, continuous::y_seq(seq, 1, lam, tau, phi, opts)), 1e-4,
                    "principal fd-ladder 1");
            EvalOptions nested = opts;
            nested.fd_step = 1e-3;
            const SurfaceFunction kf = fn(
                [=](double t, double p) { return operators::apply_kplus(vac, t, p, nested); });
            const Complex two = operators::apply_kplus(kf, tau, phi, nested) /
                                (std::sqrt(0.25 + lam * lam) * std::sqrt(2.25 + lam * lam));
            c.check(rel(two, continuous::y_seq(seq, 2, lam, tau, phi, opts)), 1e-4,
                    "principal fd-ladder 2");
        }
    }
    return c;
}

// ---- criterion 6: half-integer closed forms -----------------------------------
Criterion criterion_half_closed() {
    Criterion c;
    for (double lam : {0.5, 1.0, 3.0}) {
        for (double tau = -3.0; tau <= 3.0; tau += 0.5) {
            const double phi = 0.7;
            const Complex even = continuous::y_principal_raw(Parity::even, 0.5, lam, tau, phi,
                                                             opts);
            const Complex cosf = std::exp(I * phi / 2.0) / (std::sqrt(2.0) * pi) *
                                 std::cos(lam * tau) / std::sqrt(std::cosh(tau));
            c.check(rel(even, cosf), 1e-10, "cos form");
            const Complex odd =
                continuous::y_principal_raw(Parity::odd, 0.5, lam, tau, phi, opts);
            const Complex sinf = std::exp(I * phi / 2.0) / (std::sqrt(2.0) * pi) *
                                 std::sin(lam * tau) / std::sqrt(std::cosh(tau));
            if (std::abs(sinf) > 1e-15) c.check(rel(odd, sinf), 1e-10, "sin form");

            const double x = std::sinh(tau);
            const double w = std::sqrt(1.0 + x * x);
            const Complex up = std::pow(Complex(w + x), I * lam);
            const Complex dn = std::pow(Complex(w - x), I * lam);
            c.check(std::abs(0.5 * (up + dn) - std::cos(lam * tau)), 1e-12, "cos power form");
            c.check(std::abs((up - dn) / (2.0 * I) - std::sin(lam * tau)), 1e-12,
                    "sin power form");
        }
    }
    return c;
}

// ---- criterion 7: recurrences ---------------------------------------------------
Criterion criterion_recurrences() {
    Criterion c;
    std::mt19937 rng(97531);
    std::uniform_real_distribution<double> xs(-5.0, 5.0);
    using discrete::Recurrence;
    for (auto id : {Recurrence::a1, Recurrence::a2, Recurrence::a3, Recurrence::a4,
                    Recurrence::a5, Recurrence::a6}) {
        for (int i = 0; i < 50; ++i) {
            double k = 0.5 * (i % 9); // 0 .. 4 in half steps
            if ((id == Recurrence::a5 || id == Recurrence::a6) && k < 0.5) k = 1.0 + (i % 3);
            const double m = k + 1.0 + (i % 6);
            const double x = xs(rng);
            const double resid = discrete::recurrence_residual(id, k, m, x, opts);
            const double scale = discrete::recurrence_scale(id, k, m, x, opts);
            c.check(resid / scale, 1e-10, "recurrence");
        }
    }
    return c;
}

// ---- criterion 8: the m = +/-k family --------------------------------------------
Criterion criterion_newclass() {
    Criterion c;
    EvalOptions ode = opts;
    ode.fd_step = 3e-5;
    for (int k = 0; k <= 3; ++k)
        for (auto [al, be] : {std::pair{1.0, 0.0}, std::pair{0.0, 1.0}})
            for (double tau : {-1.2, -0.3, 0.3, 1.2})
                c.check(newclass::ode_residual(newclass::NewClassSpec{k, al, be, +1}, tau, ode),
                        1e-5, "ode");

    for (double tau = -20.0; tau <= 20.0; tau += 1.37)
        c.check(std::abs(newclass::arcsin_tanh(tau) -
                         (2.0 * std::atan(std::exp(tau)) - pi / 2.0)),
                1e-12, "arcsin identity");

    // joining at k=0: one ladder application lands on the discrete functions
    newclass::NewClassSpec s{0, 0.0, 1.0, +1};
    const SurfaceFunction f = fn([=](double t, double p) { return newclass::y_newclass(s, t, p); });
    Complex ref_low(0.0), ref_high(0.0);
    for (int i = 0; i < 10; ++i) {
        const double tau = -1.8 + 0.4 * i, phi = 0.1 + 0.5 * i;
        const Complex rl = operators::apply_kminus(f, tau, phi, opts) /
                           discrete::y_dminus(0.0, -1.0, tau, phi, opts);
        const Complex rh = operators::apply_kplus(f, tau, phi, opts) /
                           discrete::y_dplus(0.0, 1.0, tau, phi, opts);
        if (i == 0) {
            ref_low = rl;
            ref_high = rh;
        } else {
            c.check(rel(rl, ref_low), 1e-4, "joining lower");
            c.check(rel(rh, ref_high), 1e-4, "joining raise");
        }
    }

    for (int k : {1, 2}) {
        newclass::NewClassSpec g{k, 1.0, 0.0, +1};
        SurfaceFunction h =
            fn([=](double t, double p) { return newclass::y_newclass(g, t, p); });
        h.weight_m = static_cast<double>(k);
        double prev = 0.0;
        for (double T : {5.0, 10.0, 20.0}) {
            EvalOptions o = opts;
            o.quad_cutoff = T;
            o.quad_tol = 1e-8;
            const double n = operators::inner_product(h, h, o).real();
            c.check(n > prev ? 0.0 : 1.0, 0.5, "norm growth");
            prev = n;
        }
    }
    return c;
}

// ---- criterion 9: asymptotics -----------------------------------------------------
Criterion criterion_asymptotics() {
    Criterion c;
    const double T = 12.0;
    for (double lam : {0.7, 1.3}) {
        for (double m : {0.0, 1.0, 2.0}) {
            for (auto parity : {Parity::even, Parity::odd}) {
                const double norm = parity == Parity::even ? continuous::norm_even(m, lam)
                                                           : continuous::norm_odd(m, lam);
                auto stripped = [&](double t) {
                    return continuous::y_principal_raw(parity, m, lam, t, 0.0, opts) / norm *
                           std::sqrt(std::cosh(t));
                };
                const Complex f1 = stripped(T), f2 = stripped(T + 0.3);
                const Complex e = std::exp(I * lam * 0.3);
                const Complex B =
                    (f1 * std::exp(I * lam * (T + 0.3)) - f2 * std::exp(I * lam * T)) /
                    (e - 1.0 / e);
                const double expect = continuous::asymptotic_amplitude(parity, m, lam);
                c.check(std::abs(std::abs(B) - expect) / expect, 0.01, "principal envelope");
            }
        }
    }
    for (double g : {0.1, 0.25, 0.4}) {
        continuous::SupplementarySpec s{g, 0, Parity::even};
        const double t8 = 8.0;
        const Complex v =
            continuous::y_supplementary(s, t8, 0.0, opts) * std::sqrt(std::cosh(t8));
        const auto [a1, a2] = continuous::supplementary_coeffs(Parity::even, 0, g);
        const double env = std::pow(2.0, g) * a1 * std::exp(-g * t8) +
                           std::pow(2.0, -g) * a2 * std::exp(g * t8);
        c.check(std::abs(v - env) / std::abs(env), 0.02, "supplementary envelope");
    }
    return c;
}

// ---- criterion 10: numerics kernel identities ---------------------------------------
Criterion criterion_kernel() {
    Criterion c;
    using namespace numerics;
    for (double x = 0.1; x <= 10.0; x += 0.3) {
        const double g1 = gamma_magnitude_sq(GammaMagKind::half_plus_ix, x);
        const double g2 = gamma_magnitude_sq(GammaMagKind::general, Complex(0.5, x));
        c.check(std::abs(g1 - g2) / g1, 1e-12, "half magnitude");
        const double h1 = gamma_magnitude_sq(GammaMagKind::ix, x);
        const double h2 = gamma_magnitude_sq(GammaMagKind::general, Complex(0.0, x));
        c.check(std::abs(h1 - h2) / h1, 1e-12, "imag magnitude");
    }
    std::mt19937 rng(11171);
    std::uniform_real_distribution<double> za(0.0, 0.9), lm(0.3, 3.0);
    for (int i = 0; i < 25; ++i) {
        const double z = za(rng);
        const Complex alpha =
            (i % 2 == 0) ? Complex(-1.0 + 0.1 * i) : 0.5 * Complex(0.5, lm(rng));
        const Complex lhs = gauss_2f1({alpha + 0.5, alpha, Complex(0.5), z}, opts);
        const double sq = std::sqrt(z);
        const Complex rhs = 0.5 * (std::exp(-2.0 * alpha * std::log1p(sq)) +
                                   std::exp(-2.0 * alpha * std::log1p(-sq)));
        c.check(rel(lhs, rhs), 1e-10, "quadratic identity");
    }
    for (double m : {0.0, 1.0, 2.0, 3.0}) {
        for (double lam : {0.7, 2.4}) {
            const Complex a = 0.5 * (m + 0.5 + I * lam);
            const Complex b = 0.5 * (-m + 0.5 + I * lam);
            const Complex cc(0.5);
            const double z = 0.84;
            EvalOptions direct = opts;
            direct.transform_threshold = 0.97;
            const Complex lhs = gauss_2f1({a, b, cc, z}, direct);
            const Complex a1 = std::exp(log_gamma_complex(cc) + log_gamma_complex(cc - a - b) -
                                        log_gamma_complex(cc - a) - log_gamma_complex(cc - b));
            const Complex a2 = std::exp(log_gamma_complex(cc) + log_gamma_complex(a + b - cc) -
                                        log_gamma_complex(a) - log_gamma_complex(b));
            const double u = 1.0 - z;
            const Complex rhs =
                a1 * gauss_2f1({a, b, a + b - cc + 1.0, u}, opts) +
                a2 * std::exp((cc - a - b) * std::log(u)) *
                    gauss_2f1({cc - a, cc - b, cc - a - b + 1.0, u}, opts);
            c.check(rel(lhs, rhs), 1e-9, "continuation");

            // pfaff
            for (double zz : {0.1, 0.4}) {
                const Complex d1 = gauss_2f1({a, b, cc, zz}, opts);
                const Complex d2 = std::exp(-a * std::log(1.0 - zz)) *
                                   gauss_2f1({a, cc - b, cc, zz / (zz - 1.0)}, opts);
                c.check(rel(d1, d2), 1e-10, "pfaff");
            }
        }
    }
    // derivative shift against an independent finite difference
    const Complex a(0.25, 0.65), b(0.25, -0.65), cc(0.5);
    for (double z : {0.1, 0.3}) {
        const Complex shift = gauss_2f1_deriv({a, b, cc, z}, 1, opts);
        const double h = 1e-6;
        const Complex fd =
            (gauss_2f1({a, b, cc, z + h}, opts) - gauss_2f1({a, b, cc, z - h}, opts)) /
            (2.0 * h);
        c.check(rel(shift, fd), 1e-6, "derivative shift");
    }
    for (long m : {0L, 1L, 2L, 5L}) {
        for (double lam : {0.5, 1.3, 4.0}) {
            const double zp = continuous::z_factor(m, lam);
            c.check(std::abs(continuous::z_factor_gamma_a(m, lam) - zp) / zp, 1e-12,
                    "z gamma a");
            c.check(std::abs(continuous::z_factor_gamma_b(m, lam) - zp) / zp, 1e-12,
                    "z gamma b");
        }
    }
    return c;
}

} // namespace

int main() {
    struct Entry {
        const char* what;
        Criterion (*run)();
    };
    const Entry entries[] = {
        {"criterion 1: lowest-weight norm constants (1e-14)", criterion_norms},
        {"criterion 2: orthonormality quadrature (1e-7)", criterion_orthonormality},
        {"criterion 3: eigenvalue suite (C2 1e-4, K3 1e-8)", criterion_eigen},
        {"criterion 4: ladder suite (1e-4, annihilation 1e-6)", criterion_ladder},
        {"criterion 5: route equivalence (1e-9 closed, 1e-4 fd)", criterion_routes},
        {"criterion 6: half-integer closed forms (1e-10, 1e-12)", criterion_half_closed},
        {"criterion 7: recurrence sweep (1e-10 relative)", criterion_recurrences},
        {"criterion 8: new-class suite (ode 1e-5, joining 1e-4)", criterion_newclass},
        {"criterion 9: asymptotic envelopes (1%, 2%)", criterion_asymptotics},
        {"criterion 10: numerics kernel identities", criterion_kernel},
    };
    int failures = 0;
    for (const auto& e : entries) {
        Criterion c;
        try {
            c = e.run();
        } catch (const std::exception& ex) {
            c.ok = false;
            c.worst_what = std::string("exception: ") + ex.what();
        }
        std::printf("[%s] %s  (checks: %d, worst: %.3g at %s)\n", c.ok ? "PASS" : "FAIL",
                    e.what, c.worst_count, c.worst, c.worst_what.c_str());
        if (!c.ok) ++failures;
    }
    if (failures == 0)
        std::printf("acceptance: all criteria satisfied\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures;
}
