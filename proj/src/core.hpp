#ifndef HYPERWAVE_CORE_HPP
#define HYPERWAVE_CORE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyperwave {

using Complex = std::complex<double>;

/// A point (tau, phi) on the unit hyperboloid in biharmonic coordinates.
struct HyperPoint {
    double tau = 0.0;
    double phi = 0.0;
};

/// Embedding (x1, x2, x3) of the point on the hyperboloid of radius a:
/// x1^2 + x2^2 - x3^2 = a^2.
inline std::array<double, 3> embedding(HyperPoint p, double a = 1.0) {
    return {a * std::cosh(p.tau) * std::cos(p.phi), a * std::cosh(p.tau) * std::sin(p.phi),
            a * std::sinh(p.tau)};
}

/// Numerical policy shared by every evaluator.
struct EvalOptions {
    double series_tol = 1e-15;        // hypergeometric tail tolerance
    double transform_threshold = 0.5; // |z| switch for series vs continuation
    double fd_step = 1e-4;            // finite-difference step (first derivatives)
    double quad_tol = 1e-10;          // quadrature tolerance
    double quad_cutoff = 40.0;        // |tau| truncation for quadrature

    void validate() const;
    // HYPERWAVE_MAX_TERMS caps the hypergeometric series length.
    static long max_terms();
};

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

class UnknownRelationError : public std::invalid_argument {
public:
    explicit UnknownRelationError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

inline bool is_integer(double v, double eps = 1e-9) {
    return std::abs(v - std::round(v)) < eps;
}

inline bool is_half_integer_grid(double v, double eps = 1e-9) {
    return std::abs(2.0 * v - std::round(2.0 * v)) < eps;
}

/// log(cosh tau) without overflow for large |tau|.
inline double log_cosh(double tau) {
    const double a = std::abs(tau);
    return a + std::log1p(std::exp(-2.0 * a)) - M_LN2;
}

inline Complex ensure_finite(Complex v, const char* where) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw ConvergenceError(std::string(where) + ": value is not finite");
    return v;
}

inline double ensure_finite(double v, const char* where) {
    if (!std::isfinite(v))
        throw ConvergenceError(std::string(where) + ": value is not finite");
    return v;
}

} // namespace detail

} // namespace hyperwave

#endif
