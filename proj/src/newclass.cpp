#include "newclass.hpp"

#include <cmath>

namespace hyperwave::newclass {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double double_factorial_odd(int k) { // (2k-1)!!
    double v = 1.0;
    for (int j = 2 * k - 1; j >= 3; j -= 2) v *= j;
    return v;
}

double factorial(int n) {
    double v = 1.0;
    for (int j = 2; j <= n; ++j) v *= j;
    return v;
}

} // namespace

double arcsin_tanh(double tau) {
    if (std::abs(tau) > 20.0) return 2.0 * std::atan(std::exp(tau)) - kPi / 2.0;
    if (std::abs(tau) > 1.0) {
        // complementary form: asin(tanh) loses precision once tanh is near 1
        const double c = kPi / 2.0 - std::asin(1.0 / std::cosh(tau));
        return tau > 0.0 ? c : -c;
    }
    return std::asin(std::tanh(tau));
}

namespace {

// antiderivative of (1-x^2)^{k-1/2} vanishing at 0, in terms of
// s = sqrt(1-x^2) and asx = arcsin x (callers supply stable values).
double antiderivative(int k, double x, double s, double asx) {
    if (k == 0) return asx;
    if (k == 1) return 0.5 * (x * s + asx);
    const double dd = double_factorial_odd(k);
    double series = 0.0;
    double ratio = 1.0; // 2^r (r-1)!/(2r-1)!!
    double s2r = 1.0;   // (1-x^2)^r
    for (int r = 1; r <= k - 1; ++r) {
        ratio = (r == 1) ? 2.0 : ratio * 2.0 * (r - 1) / (2.0 * r - 1.0);
        s2r *= s * s;
        series += ratio * s2r;
    }
    const double bracket = std::pow(s * s, k - 1) +
                           dd / (std::pow(2.0, k) * factorial(k - 1) * (s * s)) * series;
    return x * s / (2.0 * k) * bracket + dd / (std::pow(2.0, k) * factorial(k)) * asx;
}

} // namespace

void NewClassSpec::validate() const {
    if (k < 0) throw DomainError("newclass: requires integer k >= 0");
    if (sign != +1 && sign != -1) throw DomainError("newclass: sign must select +k or -k");
}

double g_k(const NewClassSpec& spec, double x) {
    spec.validate();
    if (!(std::abs(x) < 1.0)) throw DomainError("g_k: requires |x| < 1");
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    const double inner = spec.alpha + spec.beta * antiderivative(spec.k, x, s, std::asin(x));
    return std::pow(s, -spec.k) * inner;
}

double radial(const NewClassSpec& spec, double tau) {
    spec.validate();
    const double x = std::tanh(tau);
    const double s = 1.0 / std::cosh(tau); // exact sech, no 1-x^2 cancellation
    const double inner =
        spec.alpha + spec.beta * antiderivative(spec.k, x, s, arcsin_tanh(tau));
    return detail::ensure_finite(std::pow(std::cosh(tau), spec.k) * inner, "newclass radial");
}

Complex y_newclass(const NewClassSpec& spec, double tau, double phi) {
    const Complex phase = std::exp(Complex(0.0, spec.sign * spec.k * phi));
    return phase * radial(spec, tau);
}

double ode_residual(const NewClassSpec& spec, double tau, const EvalOptions& opts) {
    opts.validate();
    const double h = 10.0 * opts.fd_step; // second-derivative step
    const double fp = radial(spec, tau + h);
    const double f0 = radial(spec, tau);
    const double fm = radial(spec, tau - h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double th = std::tanh(tau);
    const double k = spec.k;
    return std::abs(d2 + th * d1 - (k * k * th * th + k) * f0);
}

} // namespace hyperwave::newclass
