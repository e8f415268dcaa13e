#ifndef HYPERWAVE_VERIFY_HPP
#define HYPERWAVE_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "continuous.hpp"
#include "operators.hpp"

namespace hyperwave::verify {

/// Parameters of a single relation check. Relations read the fields they
/// need; unused fields are ignored.
struct RelationParams {
    double k = 0.0;
    double m = 1.0;
    double k2 = 0.0;  // second index pair (orthonormality)
    double m2 = 1.0;
    double lambda = 1.0;
    double gamma = 0.25;
    double x = 0.5;   // abscissa for P^m_k / hypergeometric checks
    double tau = 0.5;
    double phi = 0.3;
    double alpha = 0.0; // newclass constants; also re/im of the quadratic-identity exponent
    double beta = 1.0;
    double radius = 1.3; // volume-function a
    int seq = 1;
    int l = 0;
    continuous::Parity parity = continuous::Parity::even;
};

/// Evaluate one named invariant and report the residual against its default
/// tolerance (override with `tol` >= 0). Residuals are relative to the scale
/// of the quantities involved unless the relation is an annihilation.
operators::VerifyReport verify_relation(const std::string& id, const RelationParams& p,
                                        const EvalOptions& opts, double tol = -1.0);

/// All relation ids known to verify_relation.
std::vector<std::string> relation_ids();

/// Deterministic per-module check catalogs; suite is one of
/// all|numerics|discrete|continuous|newclass. Tolerance overrides are keyed
/// by relation-id prefix ("eigen", "ladder", "recurrence-a3", ...).
std::vector<operators::VerifyReport> run_suite(const std::string& suite,
                                               const EvalOptions& opts,
                                               const std::map<std::string, double>& tol = {});

std::vector<std::string> suite_names();

} // namespace hyperwave::verify

#endif
