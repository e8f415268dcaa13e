#include "series.hpp"

#include <cmath>
#include <sstream>

namespace hyperwave {

namespace {

std::string num(double v) {
    std::ostringstream os;
    if (detail::is_integer(v))
        os << static_cast<long long>(std::llround(v));
    else
        os << v;
    return os.str();
}

struct Validator {
    void operator()(const discrete::DiscreteSpec& s) const { s.validate(); }
    void operator()(const continuous::PrincipalSpec& s) const { s.validate(); }
    void operator()(const continuous::SupplementarySpec& s) const { s.validate(); }
    void operator()(const newclass::NewClassSpec& s) const { s.validate(); }
};

} // namespace

void validate(const SeriesSpec& spec) { std::visit(Validator{}, spec); }

Complex eval_series(const SeriesSpec& spec, double tau, double phi, const EvalOptions& opts) {
    using continuous::PrincipalSpec;
    return std::visit(
        [&](const auto& s) -> Complex {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, discrete::DiscreteSpec>) {
                s.validate();
                if (s.series == discrete::Series::d_plus)
                    return discrete::y_dplus(s.k, s.m, tau, phi, opts);
                return discrete::y_dminus(s.k, s.m, tau, phi, opts);
            } else if constexpr (std::is_same_v<T, PrincipalSpec>) {
                s.validate();
                switch (s.kind) {
                case PrincipalSpec::Kind::even_raw:
                    return continuous::y_principal_raw(continuous::Parity::even, s.m, s.lambda,
                                                       tau, phi, opts);
                case PrincipalSpec::Kind::odd_raw:
                    return continuous::y_principal_raw(continuous::Parity::odd, s.m, s.lambda,
                                                       tau, phi, opts);
                case PrincipalSpec::Kind::seq1:
                case PrincipalSpec::Kind::seq2: {
                    const int seq = s.kind == PrincipalSpec::Kind::seq1 ? 1 : 2;
                    if (s.m < 0.0)
                        return continuous::y_principal_negative(seq, s.m, s.lambda, tau, phi,
                                                                opts);
                    if (detail::is_integer(s.m))
                        return continuous::y_seq(seq, std::llround(s.m), s.lambda, tau, phi,
                                                 opts);
                    return continuous::y_half(seq, static_cast<int>(std::llround(s.m - 0.5)),
                                              s.lambda, tau, phi, opts);
                }
                }
                throw DomainError("principal spec: bad kind");
            } else if constexpr (std::is_same_v<T, continuous::SupplementarySpec>) {
                return continuous::y_supplementary(s, tau, phi, opts);
            } else {
                return newclass::y_newclass(s, tau, phi);
            }
        },
        spec);
}

std::string describe(const SeriesSpec& spec) {
    return std::visit(
        [&](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            std::ostringstream os;
            if constexpr (std::is_same_v<T, discrete::DiscreteSpec>) {
                os << (s.series == discrete::Series::d_plus ? "dplus" : "dminus")
                   << " k=" << num(s.k) << " m=" << num(s.m);
            } else if constexpr (std::is_same_v<T, continuous::PrincipalSpec>) {
                using K = continuous::PrincipalSpec::Kind;
                const char* kind = s.kind == K::seq1       ? "seq1"
                                   : s.kind == K::seq2     ? "seq2"
                                   : s.kind == K::even_raw ? "even-raw"
                                                           : "odd-raw";
                os << "principal " << kind << " lambda=" << s.lambda << " m=" << num(s.m);
            } else if constexpr (std::is_same_v<T, continuous::SupplementarySpec>) {
                os << "supplementary "
                   << (s.parity == continuous::Parity::even ? "even" : "odd")
                   << " gamma=" << s.gamma << " m=" << s.m;
            } else {
                os << "newclass k=" << s.k << " alpha=" << s.alpha << " beta=" << s.beta
                   << " sign=" << (s.sign > 0 ? "+k" : "-k");
            }
            return os.str();
        },
        spec);
}

} // namespace hyperwave
