#ifndef HYPERWAVE_SERIES_HPP
#define HYPERWAVE_SERIES_HPP

#include <string>
#include <variant>

#include "continuous.hpp"
#include "discrete.hpp"
#include "newclass.hpp"

namespace hyperwave {

using SeriesSpec = std::variant<discrete::DiscreteSpec, continuous::PrincipalSpec,
                                continuous::SupplementarySpec, newclass::NewClassSpec>;

void validate(const SeriesSpec& spec);

Complex eval_series(const SeriesSpec& spec, double tau, double phi, const EvalOptions& opts);

/// Short stable description, e.g. "dplus k=1 m=2" (used in file metadata).
std::string describe(const SeriesSpec& spec);

} // namespace hyperwave

#endif
