// hyperwave command line: evaluate pseudospherical functions on grids and run
// the verification catalog. Talks to the library through the C API only.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperwave/hyperwave.h"

namespace {

struct OptionsDeleter {
    void operator()(hw_options* o) const { hw_options_destroy(o); }
};
struct SeriesDeleter {
    void operator()(hw_series* s) const { hw_series_destroy(s); }
};
using OptionsPtr = std::unique_ptr<hw_options, OptionsDeleter>;
using SeriesPtr = std::unique_ptr<hw_series, SeriesDeleter>;

[[noreturn]] void die_config(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

double parse_rational(const std::string& text, const std::string& flag) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v;
        }
        const double num = std::stod(text.substr(0, slash));
        const double den = std::stod(text.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument("zero denominator");
        return num / den;
    } catch (const std::exception&) {
        die_config(flag + ": expected a number or rational like 3/2, got '" + text + "'");
    }
}

struct SeriesFlags {
    std::string series;
    std::string k = "0";
    std::string m;
    std::optional<int> m_half;
    double lambda = 1.0;
    double gamma = 0.25;
    int seq = 1;
    std::string parity = "even";
    bool raw = false;
    double alpha = 0.0;
    double beta = 1.0;
    std::string sign = "+k";

    void attach(CLI::App* cmd) {
        cmd->add_option("--series", series, "dplus|dminus|principal|supplementary|newclass")
            ->required();
        cmd->add_option("--k", k, "index k (rational, e.g. 1/2)");
        cmd->add_option("--m", m, "weight m (rational, e.g. -3/2)");
        cmd->add_option("--m-half", m_half, "weight as a count of halves (1 means m = 1/2)");
        cmd->add_option("--lambda", lambda, "principal-series lambda > 0");
        cmd->add_option("--gamma", gamma, "supplementary-series gamma in (0, 1/2)");
        cmd->add_option("--seq", seq, "principal ladder sequence (1 or 2)");
        cmd->add_option("--parity", parity, "even|odd (raw principal / supplementary)");
        cmd->add_flag("--raw", raw, "principal: use the raw even/odd function");
        cmd->add_option("--alpha", alpha, "newclass constant alpha");
        cmd->add_option("--beta", beta, "newclass constant beta");
        cmd->add_option("--sign", sign, "newclass weight sign (+k or -k)");
    }

    double weight(double fallback) const {
        if (m_half) return *m_half / 2.0;
        if (!m.empty()) return parse_rational(m, "--m");
        return fallback;
    }

    SeriesPtr build() const {
        hw_series* s = nullptr;
        hw_status st = HW_ERR_INVALID_ARGUMENT;
        if (series == "dplus") {
            const double kk = parse_rational(k, "--k");
            st = hw_series_dplus(kk, weight(kk + 1.0), &s);
        } else if (series == "dminus") {
            const double kk = parse_rational(k, "--k");
            st = hw_series_dminus(kk, weight(-(kk + 1.0)), &s);
        } else if (series == "principal") {
            if (raw)
                st = hw_series_principal_raw(parity == "odd" ? 1 : 0, weight(0.0), lambda, &s);
            else
                st = hw_series_principal_seq(seq, weight(0.0), lambda, &s);
        } else if (series == "supplementary") {
            st = hw_series_supplementary(parity == "odd" ? 1 : 0,
                                         static_cast<long>(std::llround(weight(0.0))), gamma, &s);
        } else if (series == "newclass") {
            const double kk = parse_rational(k, "--k");
            st = hw_series_newclass(static_cast<int>(std::llround(kk)), alpha, beta,
                                    sign == "-k" ? -1 : +1, &s);
        } else {
            die_config("unknown --series '" + series + "'");
        }
        if (st != HW_OK) die_config(hw_last_error());
        return SeriesPtr(s);
    }
};

struct NumericFlags {
    std::optional<double> series_tol, transform_threshold, fd_step, quad_tol, quad_cutoff;

    void attach(CLI::App* cmd) {
        cmd->add_option("--series-tol", series_tol, "hypergeometric series tolerance");
        cmd->add_option("--transform-threshold", transform_threshold,
                        "argument switch for the continuation (0,1)");
        cmd->add_option("--fd-step", fd_step, "finite-difference step");
        cmd->add_option("--quad-tol", quad_tol, "quadrature tolerance");
        cmd->add_option("--quad-cutoff", quad_cutoff, "quadrature |tau| cutoff");
    }

    OptionsPtr build() const {
        hw_options* o = nullptr;
        if (hw_options_create(&o) != HW_OK) die_config("cannot allocate options");
        OptionsPtr opts(o);
        auto set = [&](const char* key, const std::optional<double>& v) {
            if (v && hw_options_set(opts.get(), key, *v) != HW_OK) die_config(hw_last_error());
        };
        set("series-tol", series_tol);
        set("transform-threshold", transform_threshold);
        set("fd-step", fd_step);
        set("quad-tol", quad_tol);
        set("quad-cutoff", quad_cutoff);
        return opts;
    }
};

struct GridFlags {
    double tau = 0.0, phi = 0.0;
    std::optional<double> tau_min, tau_max, phi_min, phi_max;
    int tau_count = 1, phi_count = 1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tau", tau, "single tau value");
        cmd->add_option("--phi", phi, "single phi value");
        cmd->add_option("--tau-min", tau_min, "grid start in tau");
        cmd->add_option("--tau-max", tau_max, "grid end in tau");
        cmd->add_option("--tau-count", tau_count, "grid points in tau");
        cmd->add_option("--phi-min", phi_min, "grid start in phi");
        cmd->add_option("--phi-max", phi_max, "grid end in phi");
        cmd->add_option("--phi-count", phi_count, "grid points in phi");
    }

    static std::vector<double> axis(double single, std::optional<double> lo,
                                    std::optional<double> hi, int count, const char* name) {
        if (!lo && !hi) return {single};
        if (!lo || !hi) die_config(std::string(name) + ": grid needs both min and max");
        if (count < 1) die_config(std::string(name) + ": grid count must be >= 1");
        if (!std::isfinite(*lo) || !std::isfinite(*hi))
            die_config(std::string(name) + ": grid range must be finite");
        std::vector<double> v;
        if (count == 1) {
            v.push_back(*lo);
            return v;
        }
        for (int i = 0; i < count; ++i)
            v.push_back(*lo + (*hi - *lo) * static_cast<double>(i) / (count - 1));
        return v;
    }

    std::vector<double> taus() const { return axis(tau, tau_min, tau_max, tau_count, "tau"); }
    std::vector<double> phis() const { return axis(phi, phi_min, phi_max, phi_count, "phi"); }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Row {
    double tau, phi, re, im;
};

std::vector<Row> evaluate_grid(const hw_series* s, const hw_options* o, const GridFlags& grid) {
    std::vector<Row> rows;
    for (const double t : grid.taus()) {
        for (const double p : grid.phis()) {
            double re = 0.0, im = 0.0;
            if (hw_series_eval(s, o, t, p, &re, &im) != HW_OK) die_config(hw_last_error());
            rows.push_back({t, p, re, im});
        }
    }
    return rows;
}

void write_csv(std::ostream& os, const std::vector<Row>& rows, bool version_header) {
    if (version_header) os << "# hyperwave " << hw_version() << "\n";
    os << "tau,phi,re,im,abs\n";
    for (const Row& r : rows)
        os << fmt(r.tau) << ',' << fmt(r.phi) << ',' << fmt(r.re) << ',' << fmt(r.im) << ','
           << fmt(std::hypot(r.re, r.im)) << "\n";
}

void write_json(std::ostream& os, const std::vector<Row>& rows, const std::string& desc,
                bool version_header) {
    nlohmann::json values = nlohmann::json::array();
    for (const Row& r : rows)
        values.push_back({{"tau", r.tau}, {"phi", r.phi}, {"re", r.re}, {"im", r.im}});
    nlohmann::json meta = {{"series", desc}};
    if (version_header) meta["version"] = hw_version();
    os << nlohmann::json{{"metadata", std::move(meta)}, {"values", std::move(values)}}.dump(2)
       << "\n";
}

std::string describe(const hw_series* s) {
    char buf[128];
    if (hw_series_describe(s, buf, sizeof buf) != HW_OK) die_config(hw_last_error());
    return buf;
}

std::string sanitize(std::string name) {
    for (char& c : name)
        if (c == ' ' || c == '=' || c == '/') c = '_';
    return name;
}

int run_eval(const SeriesFlags& sf, const NumericFlags& nf, const GridFlags& grid,
             const std::string& format, bool version_header) {
    const SeriesPtr s = sf.build();
    const OptionsPtr o = nf.build();
    const auto rows = evaluate_grid(s.get(), o.get(), grid);
    if (format == "json")
        write_json(std::cout, rows, describe(s.get()), version_header);
    else
        write_csv(std::cout, rows, version_header);
    return 0;
}

int run_table(SeriesFlags sf, const NumericFlags& nf, const GridFlags& grid,
              const std::string& format, const std::string& out_dir,
              const std::string& m_from, const std::string& m_to, const std::string& k_from,
              const std::string& k_to, bool version_header) {
    if (out_dir.empty()) die_config("table: --out-dir is required");
    const bool over_k = !k_from.empty() || !k_to.empty();
    if (over_k && (k_from.empty() || k_to.empty()))
        die_config("table: a k range needs both --k-from and --k-to");
    const double lo = over_k ? parse_rational(k_from, "--k-from")
                             : parse_rational(m_from, "--m-from");
    const double hi = over_k ? parse_rational(k_to, "--k-to") : parse_rational(m_to, "--m-to");
    if (hi < lo) die_config("table: range end must be >= range start");
    std::filesystem::create_directories(out_dir);
    const OptionsPtr o = nf.build();
    for (double v = lo; v <= hi + 1e-9; v += 1.0) {
        std::ostringstream vs;
        vs << v;
        if (over_k) {
            sf.k = vs.str(); // the weight flags keep their per-family defaults
        } else {
            sf.m = vs.str();
            sf.m_half.reset();
        }
        const SeriesPtr s = sf.build();
        const auto rows = evaluate_grid(s.get(), o.get(), grid);
        const std::string desc = describe(s.get());
        const std::string path =
            out_dir + "/" + sanitize(desc) + (format == "json" ? ".json" : ".csv");
        std::ofstream file(path);
        if (!file) die_config("table: cannot open '" + path + "' for writing");
        if (format == "json")
            write_json(file, rows, desc, version_header);
        else
            write_csv(file, rows, version_header);
        std::cout << path << "\n";
    }
    return 0;
}

int run_verify(const NumericFlags& nf, const std::string& suite, const std::string& format,
               const std::vector<std::pair<std::string, double>>& tols) {
    const OptionsPtr o = nf.build();
    std::string overrides;
    for (const auto& [prefix, value] : tols) {
        if (!overrides.empty()) overrides += ',';
        overrides += prefix + "=" + fmt(value);
    }
    char* json = nullptr;
    int pass = 0, failed = 0;
    const hw_status st = hw_verify_suite(suite.c_str(), o.get(),
                                         overrides.empty() ? nullptr : overrides.c_str(), &json,
                                         &pass, &failed);
    if (st != HW_OK) die_config(hw_last_error());
    if (format == "json") {
        std::cout << json << "\n";
    } else {
        const auto doc = nlohmann::json::parse(json);
        for (const auto& c : doc["checks"])
            std::cout << (c["pass"].get<bool>() ? "PASS " : "FAIL ")
                      << c["name"].get<std::string>()
                      << "  residual=" << c["residual"].get<double>()
                      << "  tol=" << c["tolerance"].get<double>() << "\n";
        std::cout << "suite " << suite << ": " << pass << " passed, " << failed << " failed\n";
    }
    hw_string_free(json);
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudospherical functions on the one-sheet hyperboloid"};
    app.require_subcommand(1);

    SeriesFlags eval_series, table_series;
    NumericFlags eval_num, table_num, verify_num;
    GridFlags eval_grid, table_grid;
    std::string eval_format = "csv", table_format = "csv", verify_format = "human";
    bool eval_version = false, table_version = false;
    std::string out_dir, m_from = "1", m_to = "4", k_from, k_to;
    std::string suite = "all";

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function at points or a grid");
    eval_series.attach(eval);
    eval_num.attach(eval);
    eval_grid.attach(eval);
    eval->add_option("--format", eval_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    eval->add_flag("--version-header", eval_version, "include the library version in output");

    CLI::App* table = app.add_subcommand("table", "write one file per weight over an m range");
    table_series.attach(table);
    table_num.attach(table);
    table_grid.attach(table);
    table->add_option("--format", table_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--m-from", m_from, "first weight (rational)");
    table->add_option("--m-to", m_to, "last weight (rational, step 1)");
    table->add_option("--k-from", k_from, "iterate over k instead (rational, step 1)");
    table->add_option("--k-to", k_to, "last k of the range");
    table->add_option("--out-dir", out_dir, "output directory")->required();
    table->add_flag("--version-header", table_version, "include the library version in output");

    CLI::App* verify = app.add_subcommand("verify", "run the relation catalog");
    verify_num.attach(verify);
    verify->add_option("--suite", suite, "all|numerics|discrete|continuous|newclass");
    verify->add_option("--format", verify_format, "human|json")
        ->check(CLI::IsMember({"human", "json"}));
    std::optional<double> tol_eigen, tol_ladder, tol_ortho, tol_route, tol_rec, tol_annihilate;
    verify->add_option("--tol-eigen", tol_eigen, "override eigen-* tolerances");
    verify->add_option("--tol-ladder", tol_ladder, "override ladder-* tolerances");
    verify->add_option("--tol-ortho", tol_ortho, "override orthonormality tolerance");
    verify->add_option("--tol-route", tol_route, "override route-*/interleave-* tolerances");
    verify->add_option("--tol-recurrence", tol_rec, "override recurrence-* tolerances");
    verify->add_option("--tol-annihilate", tol_annihilate, "override annihilate-* tolerances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (eval->parsed()) return run_eval(eval_series, eval_num, eval_grid, eval_format, eval_version);
    if (table->parsed())
        return run_table(table_series, table_num, table_grid, table_format, out_dir, m_from,
                         m_to, k_from, k_to, table_version);
    if (verify->parsed()) {
        std::vector<std::pair<std::string, double>> tols;
        if (tol_eigen) tols.emplace_back("eigen", *tol_eigen);
        if (tol_ladder) tols.emplace_back("ladder", *tol_ladder);
        if (tol_ortho) tols.emplace_back("orthonormality", *tol_ortho);
        if (tol_route) {
            tols.emplace_back("route", *tol_route);
            tols.emplace_back("interleave", *tol_route);
        }
        if (tol_rec) tols.emplace_back("recurrence", *tol_rec);
        if (tol_annihilate) tols.emplace_back("annihilate", *tol_annihilate);
        return run_verify(verify_num, suite, verify_format, tols);
    }
    return 2;
}
