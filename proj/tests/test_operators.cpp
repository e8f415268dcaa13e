#include <doctest.h>

#include "continuous.hpp"
#include "discrete.hpp"
#include "operators.hpp"
#include "oracles.hpp"

using namespace hyperwave;
using namespace hyperwave::operators;
using oracles::cdist;

namespace {
const EvalOptions opts{};
const Complex I(0.0, 1.0);
constexpr double pi = 3.14159265358979323846;

SurfaceFunction dplus_fn(double k, double m, bool declare = false) {
    SurfaceFunction f;
    f.eval = [k, m](double t, double p) { return discrete::y_dplus(k, m, t, p, EvalOptions{}); };
    if (declare) {
        f.weight_m = m;
        f.decay_power = k + 1.0;
    }
    return f;
}

} // namespace

TEST_CASE("biharmonic embedding lands on the hyperboloid") {
    for (double tau : {-2.0, 0.0, 1.3})
        for (double phi : {0.0, 2.1})
            for (double a : {1.0, 2.5}) {
                const auto x = embedding(HyperPoint{tau, phi}, a);
                CHECK(x[0] * x[0] + x[1] * x[1] - x[2] * x[2] ==
                      doctest::Approx(a * a).epsilon(1e-14));
            }
}

TEST_CASE("integrate_adaptive basics") {
    const Complex s = integrate_adaptive([](double x) { return Complex(std::sin(x)); }, 0.0,
                                         pi, 1e-12);
    CHECK(std::abs(s.real() - 2.0) < 1e-11);
    // narrow feature inside a wide interval must not be skipped
    const Complex g = integrate_adaptive(
        [](double x) { return Complex(std::exp(-x * x)); }, -40.0, 40.0, 1e-12);
    CHECK(std::abs(g.real() - std::sqrt(pi)) < 1e-10);
}

TEST_CASE("apply_k3") {
    SurfaceFunction wave;
    wave.eval = [](double, double p) { return std::exp(2.0 * I * p); };
    CHECK(cdist(apply_k3(wave, 0.3, 0.9, opts), 2.0 * std::exp(2.0 * I * 0.9)) < 1e-7);
    wave.weight_m = 2.0;
    CHECK(cdist(apply_k3(wave, 0.3, 0.9, opts), 2.0 * std::exp(2.0 * I * 0.9)) == 0.0);

    SurfaceFunction constant;
    constant.eval = [](double, double) { return Complex(1.0); };
    CHECK(std::abs(apply_k3(constant, 0.1, 0.2, opts)) < 1e-10);

    EvalOptions fine = opts;
    fine.fd_step = 1e-5;
    const SurfaceFunction y = dplus_fn(0.0, 1.0);
    const Complex obs = apply_k3(y, 0.5, 0.8, fine);
    CHECK(std::abs(obs - y(0.5, 0.8)) < 1e-8);
}

TEST_CASE("ladder operators") {
    SurfaceFunction constant;
    constant.eval = [](double, double) { return Complex(1.0); };
    CHECK(std::abs(apply_kplus(constant, 0.4, 0.2, opts)) < 1e-10);

    // annihilation of the lowest weight
    const SurfaceFunction low = dplus_fn(1.0, 2.0);
    CHECK(std::abs(apply_kminus(low, 0.6, 0.3, opts)) < 1e-6);

    // raising coefficient
    const SurfaceFunction y10 = dplus_fn(0.0, 1.0);
    const Complex obs = apply_kplus(y10, 0.5, 0.0, opts);
    const Complex expect = std::sqrt(2.0) * discrete::y_dplus(0.0, 2.0, 0.5, 0.0, opts);
    CHECK(std::abs(obs - expect) < 1e-5);
}

TEST_CASE("casimir") {
    SurfaceFunction constant;
    constant.eval = [](double, double) { return Complex(1.0); };
    CHECK(std::abs(apply_casimir(constant, 0.4, 0.2, opts)) < 1e-8);

    const SurfaceFunction y = dplus_fn(1.0, 2.0);
    CHECK(std::abs(apply_casimir(y, 0.4, 0.6, opts) - 2.0 * y(0.4, 0.6)) < 1e-4);

    SurfaceFunction p;
    p.eval = [](double t, double ph) {
        return continuous::y_seq(1, 1, 1.0, t, ph, EvalOptions{});
    };
    const Complex v = p(0.4, 0.6);
    CHECK(std::abs(apply_casimir(p, 0.4, 0.6, opts) - (-1.25) * v) < 1e-4);
}

TEST_CASE("inner product") {
    const SurfaceFunction a = dplus_fn(0.0, 1.0, true);
    const SurfaceFunction b = dplus_fn(0.0, 2.0, true);
    const SurfaceFunction c = dplus_fn(1.0, 2.0, true);
    CHECK(std::abs(inner_product(a, a, opts) - 1.0) < 1e-7);
    CHECK(std::abs(inner_product(a, b, opts)) == 0.0); // distinct weights, exact
    CHECK(std::abs(inner_product(b, c, opts)) < 1e-7);

    // without declared weights the phi average is used
    SurfaceFunction raw = dplus_fn(0.0, 1.0);
    CHECK(std::abs(inner_product(raw, raw, opts) - 1.0) < 1e-7);

    // conjugate symmetry on a non-orthogonal pair
    SurfaceFunction mix;
    mix.eval = [](double t, double p) {
        return discrete::y_dplus(0.0, 2.0, t, p, EvalOptions{}) +
               Complex(0.2, 0.4) * discrete::y_dplus(1.0, 2.0, t, p, EvalOptions{});
    };
    mix.weight_m = 2.0;
    mix.decay_power = 1.0;
    const Complex fg = inner_product(b, mix, opts);
    const Complex gf = inner_product(mix, b, opts);
    CHECK(cdist(fg, std::conj(gf)) < 1e-9);
}

TEST_CASE("inner product rejects non-decaying integrands when declared") {
    SurfaceFunction grow;
    grow.eval = [](double t, double) { return Complex(std::cosh(t)); };
    grow.decay_power = -1.0;
    grow.weight_m = 0.0;
    SurfaceFunction same = grow;
    CHECK_THROWS_AS((void)inner_product(grow, same, opts), ConvergenceError);
}

TEST_CASE("fd step underflow is reported") {
    SurfaceFunction f;
    f.eval = [](double t, double) { return Complex(std::sin(t)); };
    EvalOptions tiny = opts;
    tiny.fd_step = 1e-300;
    CHECK_THROWS_AS((void)apply_kplus(f, 1.0, 0.0, tiny), DomainError);
}

TEST_CASE("commutators close on smooth functions") {
    EvalOptions nested = opts;
    nested.fd_step = 1e-3;
    SurfaceFunction f;
    f.eval = [](double t, double p) { return std::exp(I * p) / std::cosh(t); };
    SurfaceFunction kp, km, k3;
    kp.eval = [&](double t, double p) { return apply_kplus(f, t, p, nested); };
    km.eval = [&](double t, double p) { return apply_kminus(f, t, p, nested); };
    k3.eval = [&](double t, double p) { return apply_k3(f, t, p, nested); };
    const double tau = 0.7, phi = 1.1;
    const Complex c1 = apply_k3(kp, tau, phi, nested) - apply_kplus(k3, tau, phi, nested);
    CHECK(std::abs(c1 - apply_kplus(f, tau, phi, nested)) < 1e-3);
    const Complex c2 = apply_kplus(km, tau, phi, nested) - apply_kminus(kp, tau, phi, nested);
    CHECK(std::abs(c2 - (-2.0) * apply_k3(f, tau, phi, nested)) < 1e-3);
    const Complex c3 = apply_k3(k3, tau, phi, nested) + apply_k3(f, tau, phi, nested) -
                       apply_kminus(kp, tau, phi, nested);
    CHECK(std::abs(c3 - apply_casimir(f, tau, phi, nested)) < 1e-3);
}

TEST_CASE("first-derivative operators converge at second order") {
    SurfaceFunction f;
    f.eval = [](double t, double p) { return std::exp(I * p) / std::cosh(t); };
    const double tau = 0.8, phi = 0.4;
    const Complex exact = 2.0 * std::tanh(tau) / std::cosh(tau) * std::exp(2.0 * I * phi);
    EvalOptions o1 = opts, o2 = opts;
    o1.fd_step = 1e-3;
    o2.fd_step = 5e-4;
    const double e1 = std::abs(apply_kplus(f, tau, phi, o1) - exact);
    const double e2 = std::abs(apply_kplus(f, tau, phi, o2) - exact);
    CHECK(e1 / e2 > 3.0);
    CHECK(e1 / e2 < 5.0);
}
