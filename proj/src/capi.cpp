#include "hyperwave/hyperwave.h"

#include <cstring>
#include <sstream>

#include <json.hpp>

#include "series.hpp"
#include "verify.hpp"

using hyperwave::Complex;
using hyperwave::EvalOptions;
using hyperwave::SeriesSpec;

struct hw_options {
    EvalOptions v;
};

struct hw_series {
    SeriesSpec spec;
};

namespace {

thread_local std::string g_last_error;

hw_status fail(hw_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
hw_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return HW_OK;
    } catch (const hyperwave::PoleError& e) {
        return fail(HW_ERR_POLE, e.what());
    } catch (const hyperwave::DomainError& e) {
        return fail(HW_ERR_DOMAIN, e.what());
    } catch (const hyperwave::ConvergenceError& e) {
        return fail(HW_ERR_NO_CONVERGENCE, e.what());
    } catch (const hyperwave::UnknownRelationError& e) {
        return fail(HW_ERR_UNKNOWN_NAME, e.what());
    } catch (const std::exception& e) {
        return fail(HW_ERR_INVALID_ARGUMENT, e.what());
    }
}

hw_status make_series(SeriesSpec spec, hw_series** out) {
    if (!out) return fail(HW_ERR_INVALID_ARGUMENT, "null output handle");
    *out = nullptr;
    return guarded([&] {
        hyperwave::validate(spec);
        *out = new hw_series{std::move(spec)};
    });
}

} // namespace

extern "C" {

const char* hw_version(void) { return "0.1.0"; }

const char* hw_last_error(void) { return g_last_error.c_str(); }

hw_status hw_options_create(hw_options** out) {
    if (!out) return fail(HW_ERR_INVALID_ARGUMENT, "null output handle");
    *out = new hw_options{};
    return HW_OK;
}

void hw_options_destroy(hw_options* opts) { delete opts; }

hw_status hw_options_set(hw_options* opts, const char* key, double value) {
    if (!opts || !key) return fail(HW_ERR_INVALID_ARGUMENT, "null options or key");
    return guarded([&] {
        EvalOptions next = opts->v;
        const std::string k(key);
        if (k == "series-tol")
            next.series_tol = value;
        else if (k == "transform-threshold")
            next.transform_threshold = value;
        else if (k == "fd-step")
            next.fd_step = value;
        else if (k == "quad-tol")
            next.quad_tol = value;
        else if (k == "quad-cutoff")
            next.quad_cutoff = value;
        else
            throw hyperwave::DomainError("unknown option key '" + k + "'");
        next.validate();
        opts->v = next;
    });
}

hw_status hw_options_get(const hw_options* opts, const char* key, double* out) {
    if (!opts || !key || !out) return fail(HW_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const std::string k(key);
        if (k == "series-tol")
            *out = opts->v.series_tol;
        else if (k == "transform-threshold")
            *out = opts->v.transform_threshold;
        else if (k == "fd-step")
            *out = opts->v.fd_step;
        else if (k == "quad-tol")
            *out = opts->v.quad_tol;
        else if (k == "quad-cutoff")
            *out = opts->v.quad_cutoff;
        else
            throw hyperwave::DomainError("unknown option key '" + k + "'");
    });
}

hw_status hw_series_dplus(double k, double m, hw_series** out) {
    return make_series(hyperwave::discrete::DiscreteSpec{k, m, hyperwave::discrete::Series::d_plus},
                       out);
}

hw_status hw_series_dminus(double k, double m, hw_series** out) {
    return make_series(
        hyperwave::discrete::DiscreteSpec{k, m, hyperwave::discrete::Series::d_minus}, out);
}

hw_status hw_series_principal_seq(int seq, double m, double lambda, hw_series** out) {
    if (seq != 1 && seq != 2) return fail(HW_ERR_INVALID_ARGUMENT, "sequence must be 1 or 2");
    hyperwave::continuous::PrincipalSpec s;
    s.lambda = lambda;
    s.m = m;
    s.kind = seq == 1 ? hyperwave::continuous::PrincipalSpec::Kind::seq1
                      : hyperwave::continuous::PrincipalSpec::Kind::seq2;
    return make_series(s, out);
}

hw_status hw_series_principal_raw(int parity, double m, double lambda, hw_series** out) {
    if (parity != 0 && parity != 1)
        return fail(HW_ERR_INVALID_ARGUMENT, "parity must be 0 (even) or 1 (odd)");
    hyperwave::continuous::PrincipalSpec s;
    s.lambda = lambda;
    s.m = m;
    s.kind = parity == 0 ? hyperwave::continuous::PrincipalSpec::Kind::even_raw
                         : hyperwave::continuous::PrincipalSpec::Kind::odd_raw;
    return make_series(s, out);
}

hw_status hw_series_supplementary(int parity, long m, double gamma, hw_series** out) {
    if (parity != 0 && parity != 1)
        return fail(HW_ERR_INVALID_ARGUMENT, "parity must be 0 (even) or 1 (odd)");
    hyperwave::continuous::SupplementarySpec s;
    s.gamma = gamma;
    s.m = m;
    s.parity = parity == 0 ? hyperwave::continuous::Parity::even
                           : hyperwave::continuous::Parity::odd;
    return make_series(s, out);
}

hw_status hw_series_newclass(int k, double alpha, double beta, int sign, hw_series** out) {
    return make_series(hyperwave::newclass::NewClassSpec{k, alpha, beta, sign}, out);
}

void hw_series_destroy(hw_series* s) { delete s; }

hw_status hw_series_describe(const hw_series* s, char* buf, size_t buflen) {
    if (!s || !buf || buflen == 0) return fail(HW_ERR_INVALID_ARGUMENT, "null argument");
    const std::string d = hyperwave::describe(s->spec);
    std::strncpy(buf, d.c_str(), buflen - 1);
    buf[buflen - 1] = '\0';
    return HW_OK;
}

hw_status hw_series_eval(const hw_series* s, const hw_options* opts, double tau, double phi,
                         double* re, double* im) {
    if (!s || !re || !im) return fail(HW_ERR_INVALID_ARGUMENT, "null argument");
    const EvalOptions o = opts ? opts->v : EvalOptions{};
    return guarded([&] {
        const Complex v = hyperwave::eval_series(s->spec, tau, phi, o);
        *re = v.real();
        *im = v.imag();
    });
}

hw_status hw_verify_suite(const char* suite, const hw_options* opts, const char* tol_overrides,
                          char** json_out, int* pass_count, int* fail_count) {
    if (!suite || !json_out || !pass_count || !fail_count)
        return fail(HW_ERR_INVALID_ARGUMENT, "null argument");
    *json_out = nullptr;
    const EvalOptions o = opts ? opts->v : EvalOptions{};
    return guarded([&] {
        std::map<std::string, double> tols;
        if (tol_overrides && *tol_overrides) {
            std::stringstream ss(tol_overrides);
            std::string item;
            while (std::getline(ss, item, ',')) {
                const auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw hyperwave::DomainError("tolerance override must be prefix=value: '" +
                                                 item + "'");
                tols[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
            }
        }
        const auto reports = hyperwave::verify::run_suite(suite, o, tols);
        int pass = 0, failn = 0;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : reports) {
            if (r.pass)
                ++pass;
            else
                ++failn;
            checks.push_back({{"name", r.name},
                              {"expected", {r.expected.real(), r.expected.imag()}},
                              {"observed", {r.observed.real(), r.observed.imag()}},
                              {"residual", r.residual},
                              {"tolerance", r.tolerance},
                              {"pass", r.pass}});
        }
        nlohmann::json doc = {{"suite", suite},
                              {"pass", pass},
                              {"fail", failn},
                              {"checks", std::move(checks)}};
        const std::string text = doc.dump(2);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *json_out = buf;
        *pass_count = pass;
        *fail_count = failn;
    });
}

void hw_string_free(char* s) { delete[] s; }

} // extern "C"
