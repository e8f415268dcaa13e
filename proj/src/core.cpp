#include "core.hpp"

namespace hyperwave {

void EvalOptions::validate() const {
    if (!(series_tol > 0.0) || !(fd_step > 0.0) || !(quad_tol > 0.0) || !(quad_cutoff > 0.0))
        throw DomainError("EvalOptions: all tolerances and steps must be strictly positive");
    if (!(transform_threshold > 0.0) || !(transform_threshold < 1.0))
        throw DomainError("EvalOptions: transform_threshold must lie in (0,1)");
}

long EvalOptions::max_terms() {
    static const long cached = [] {
        if (const char* s = std::getenv("HYPERWAVE_MAX_TERMS")) {
            char* end = nullptr;
            const long v = std::strtol(s, &end, 10);
            if (end != s && v > 0) return v;
        }
        return 10000L;
    }();
    return cached;
}

} // namespace hyperwave
