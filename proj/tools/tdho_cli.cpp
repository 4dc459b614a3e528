// Command-line front end over the C interface.
//
//   tdho evolve        trajectory + per-sample reports
//   tdho closed-form   xi^2, squeeze parameters and uncertainty extrema
//   tdho desitter      k-scan and analytic-vs-integrator comparison
//   tdho select-vacuum squeeze-grid scan of the uncertainty functional
//   tdho verify        invariant suite; exit 1 if a gating check fails
//
// Exit codes: 0 success, 1 verification failure, 2 configuration or domain error.

#include "tdho/tdho.h"

#include <CLI11.hpp>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(tdho_status st, const char* what) {
    if (st != TDHO_OK)
        throw ApiError(std::string(what) + ": " + tdho_status_name(st) + ": " + tdho_last_error());
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
    T** out() { return &p; }
    T* get() const { return p; }
};

using Oscillator = Handle<tdho_oscillator, tdho_oscillator_free>;
using Trajectory = Handle<tdho_trajectory, tdho_trajectory_free>;
using Selection = Handle<tdho_selection, tdho_selection_free>;
using Comparison = Handle<tdho_comparison, tdho_comparison_free>;
using KScan = Handle<tdho_kscan, tdho_kscan_free>;
using VerifyReport = Handle<tdho_verify_report, tdho_verify_report_free>;

template <class F>
std::string fetch_csv(F&& call, const char* what) {
    size_t needed = 0;
    const tdho_status st = call(nullptr, 0, &needed);
    if (st != TDHO_ERR_BUFFER_TOO_SMALL) check(st, what);
    std::string buf(needed, '\0');
    check(call(buf.data(), buf.size(), &needed), what);
    buf.resize(needed - 1);
    return buf;
}

std::string fmt(double v) {
    char buf[64];
    size_t needed = 0;
    check(tdho_format_double(v, buf, sizeof buf, &needed), "format");
    return buf;
}

// Raw option values keyed by their config-file name; flags are stored first
// and the config file only fills keys that are still empty.
class Settings {
public:
    std::map<std::string, std::string> values;
    fs::path config_dir;

    void load_ini(const std::string& path) {
        if (!fs::exists(path)) throw ConfigError("config file not found: " + path);
        boost::property_tree::ptree tree;
        try {
            boost::property_tree::ini_parser::read_ini(path, tree);
        } catch (const boost::property_tree::ini_parser_error& e) {
            throw ConfigError(std::string("config parse error: ") + e.what());
        }
        static const std::map<std::string, std::set<std::string>> sections = {
            {"oscillator", {"kind", "m0", "omega", "profile", "H0", "m", "msq", "k"}},
            {"squeeze", {"r", "delta", "epsilon", "r_grid", "delta_grid", "functional", "t_star"}},
            {"grid", {"t0", "t_end", "samples", "z_start", "z_end", "t"}},
            {"run", {"tol", "out"}},
        };
        config_dir = fs::path(path).parent_path();
        for (const auto& [section, body] : tree) {
            const auto allowed = sections.find(section);
            if (allowed == sections.end() || body.empty())
                throw ConfigError("unknown config section [" + section + "]");
            for (const auto& [key, node] : body) {
                if (!allowed->second.count(key))
                    throw ConfigError("unknown key '" + key + "' in [" + section + "]");
                if (key == "m") {
                    if (values["msq"].empty()) {
                        const double m = parse_double(key, node.data());
                        values["msq"] = fmt(m * m);
                    }
                    continue;
                }
                std::string& slot = values[key];
                if (slot.empty()) {
                    slot = node.data();
                    if (key == "profile" || key == "out") from_config.insert(key);
                }
            }
        }
    }

    bool has(const std::string& key) const {
        auto it = values.find(key);
        return it != values.end() && !it->second.empty();
    }

    std::string str(const std::string& key, const std::string& fallback) const {
        return has(key) ? values.at(key) : fallback;
    }

    std::optional<double> num(const std::string& key) const {
        if (!has(key)) return std::nullopt;
        return parse_double(key, values.at(key));
    }

    double num(const std::string& key, double fallback) const {
        return num(key).value_or(fallback);
    }

    size_t count(const std::string& key, size_t fallback) const {
        if (!has(key)) return fallback;
        const std::string& s = values.at(key);
        size_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
            throw ConfigError("'" + key + "' must be a non-negative integer, got '" + s + "'");
        return v;
    }

    std::vector<double> list(const std::string& key, std::vector<double> fallback) const {
        if (!has(key)) return fallback;
        std::vector<double> out;
        std::string item;
        for (char c : values.at(key) + ",") {
            if (c == ',') {
                if (!item.empty()) out.push_back(parse_double(key, item));
                item.clear();
            } else if (c != ' ') {
                item += c;
            }
        }
        if (out.empty()) throw ConfigError("'" + key + "' is an empty list");
        return out;
    }

    // Paths from the config file are relative to the file itself.
    std::string path(const std::string& key) const {
        if (!has(key)) return {};
        fs::path p = values.at(key);
        if (from_config.count(key) && p.is_relative()) p = config_dir / p;
        return p.string();
    }

private:
    std::set<std::string> from_config;

    static double parse_double(const std::string& key, const std::string& s) {
        double v = 0.0;
        const char* b = s.data();
        const char* e = s.data() + s.size();
        if (b != e && *b == '+') ++b;
        const auto res = std::from_chars(b, e, v);
        if (res.ec != std::errc{} || res.ptr != e)
            throw ConfigError("'" + key + "' must be a number, got '" + s + "'");
        return v;
    }
};

class Output {
public:
    explicit Output(const std::string& path) : path_(path) {}

    // Writes the main table to --out (or stdout) and each extra table to
    // <stem><suffix> beside it (or stdout after a blank line).
    void main(const std::string& text) { emit(path_, text); }

    void extra(const std::string& suffix, const std::string& text) {
        if (path_.empty()) {
            std::cout << '\n';
            emit({}, text);
            return;
        }
        fs::path p(path_);
        fs::path q = p.parent_path() / (p.stem().string() + suffix);
        emit(q.string(), text);
    }

private:
    std::string path_;

    static void emit(const std::string& path, const std::string& text) {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file " + path);
        f << text;
        if (!f) throw ConfigError("failed writing " + path);
        std::cerr << "wrote " << path << '\n';
    }
};

void build_oscillator(const Settings& s, Oscillator& osc) {
    const std::string kind = s.str("kind", s.has("profile") ? "tabulated" : "constant");
    const double m0 = s.num("m0", 1.0);
    if (kind == "constant") {
        const double w = s.num("omega", 1.0);
        if (!(w > 0.0)) throw ConfigError("omega must be positive");
        check(tdho_oscillator_constant(m0, w * w, osc.out()), "oscillator");
    } else if (kind == "tabulated") {
        const std::string path = s.path("profile");
        if (path.empty()) throw ConfigError("tabulated kind needs --profile");
        if (!fs::exists(path)) throw ConfigError("profile not found: " + path);
        check(tdho_oscillator_load_profile(path.c_str(), m0, osc.out()), "profile");
    } else if (kind == "desitter") {
        tdho_desitter_spec spec;
        check(tdho_derive_spec(s.num("H0", 1.0), s.num("msq", 2.0), s.num("k", 1.0), 1, &spec),
              "de Sitter spec");
        check(tdho_oscillator_desitter(&spec, osc.out()), "oscillator");
    } else {
        throw ConfigError("unknown oscillator kind '" + kind + "' (constant, tabulated, desitter)");
    }
}

std::optional<tdho_squeeze_params> squeeze_from_settings(const Settings& s) {
    tdho_squeeze_params p;
    if (s.has("epsilon")) {
        if (s.has("r")) throw ConfigError("give either epsilon or r, not both");
        check(tdho_squeeze_from_energy(*s.num("epsilon"), s.num("omega", 1.0), &p), "squeeze");
        return p;
    }
    if (s.has("r") || s.has("delta")) {
        check(tdho_polar_to_bogoliubov(s.num("r", 0.0), s.num("delta", 0.0), &p), "squeeze");
        return p;
    }
    return std::nullopt;
}

std::vector<double> linspace(double a, double b, size_t n) {
    if (n < 2) throw ConfigError("samples must be at least 2");
    std::vector<double> g(n);
    const double h = (b - a) / static_cast<double>(n - 1);
    for (size_t i = 0; i < n; ++i) g[i] = a + h * static_cast<double>(i);
    g.back() = b;
    return g;
}

void integrate_base(const Settings& s, const Oscillator& osc, Trajectory& traj) {
    const double t0 = s.num("t0", 0.0);
    const double t_end = s.num("t_end", 2.0 * kPi);
    const auto grid = linspace(t0, t_end, s.count("samples", 1001));
    tdho_mode_sample init;
    check(tdho_init_minimum_uncertainty(osc.get(), t0, &init), "initial sample");
    check(tdho_integrate_mode(osc.get(), &init, t_end, s.num("tol", 1e-12), grid.data(),
                              grid.size(), traj.out()),
          "integration");
}

int run_evolve(const Settings& s) {
    Oscillator osc;
    build_oscillator(s, osc);
    Trajectory base;
    integrate_base(s, osc, base);
    std::cerr << "max |W - i| = " << fmt(tdho_trajectory_max_drift(base.get())) << '\n';

    const tdho_trajectory* shown = base.get();
    Trajectory mixed;
    if (auto p = squeeze_from_settings(s)) {
        check(tdho_trajectory_mix(base.get(), &*p, mixed.out()), "mix");
        shown = mixed.get();
    }
    Output out(s.path("out"));
    out.main(fetch_csv([&](char* b, size_t c, size_t* n) { return tdho_trajectory_csv(shown, b, c, n); },
                       "trajectory csv"));
    out.extra(".reports.csv",
              fetch_csv([&](char* b, size_t c, size_t* n) { return tdho_reports_csv(shown, b, c, n); },
                        "reports csv"));
    return 0;
}

int run_closed_form(const Settings& s) {
    const double omega = s.num("omega", 1.0);
    const double eps = s.num("epsilon", 0.5 * omega);
    tdho_squeeze_params p;
    check(tdho_squeeze_from_energy(eps, omega, &p), "squeeze_from_energy");
    double lo = 0.0, hi = 0.0;
    check(tdho_uncertainty_extrema(&p, &lo, &hi), "extrema");

    std::vector<double> times;
    if (auto t = s.num("t")) {
        times.push_back(*t);
    } else {
        if (!(omega > 0.0)) throw ConfigError("omega must be positive");
        times = linspace(0.0, kPi / omega, s.count("samples", 33));
    }
    std::string text = "omega,epsilon,t,xi_sq,mu,nu,r,product_min,product_max\n";
    for (double t : times) {
        double xi_sq = 0.0;
        check(tdho_closed_form_xi_sq(eps, omega, t, &xi_sq), "closed_form_xi_sq");
        text += fmt(omega) + ',' + fmt(eps) + ',' + fmt(t) + ',' + fmt(xi_sq) + ',' + fmt(p.mu.re) +
                ',' + fmt(p.nu.re) + ',' + fmt(p.r) + ',' + fmt(lo) + ',' + fmt(hi) + '\n';
    }
    Output(s.path("out")).main(text);
    return 0;
}

int run_desitter(const Settings& s) {
    const double H0 = s.num("H0", 1.0), msq = s.num("msq", 2.0);
    const std::vector<double> ks = s.list("k", {1.0});
    const double z_start = s.num("z_start", 50.0), z_end = s.num("z_end", 0.5);
    const size_t n = s.count("samples", 2001);
    const double tol = s.num("tol", 1e-12);

    KScan scan;
    check(tdho_kscan_run(H0, msq, ks.data(), ks.size(), z_start, z_end, n, tol, scan.out()),
          "k-scan");
    std::string comparison;
    for (double k : ks) {
        tdho_desitter_spec spec;
        check(tdho_derive_spec(H0, msq, k, 1, &spec), "de Sitter spec");
        Comparison cmp;
        check(tdho_compare_bunch_davies(&spec, z_start, z_end, n, tol, cmp.out()), "comparison");
        tdho_comparison_summary sum;
        check(tdho_comparison_summary_get(cmp.get(), &sum), "comparison");
        std::string csv = fetch_csv(
            [&](char* b, size_t c, size_t* m) { return tdho_comparison_csv(cmp.get(), b, c, m); },
            "comparison csv");
        if (!comparison.empty()) csv.erase(0, csv.find('\n') + 1);
        comparison += csv;
        std::cerr << "k = " << fmt(k) << ": ";
        if (sum.has_analytic)
            std::cerr << "max rel dev u = " << fmt(sum.max_rel_dev_u)
                      << ", du = " << fmt(sum.max_rel_dev_du) << ", ";
        else
            std::cerr << "imaginary order, integrator only, ";
        std::cerr << "max |W - i| = " << fmt(std::max(sum.max_wronskian_analytic, sum.max_wronskian_numeric))
                  << '\n';
    }
    Output out(s.path("out"));
    out.main(fetch_csv([&](char* b, size_t c, size_t* m) { return tdho_kscan_csv(scan.get(), b, c, m); },
                       "k-scan csv"));
    out.extra("_comparison.csv", comparison);
    return 0;
}

tdho_functional functional_from(const std::string& name) {
    if (name == "max" || name == "max-over-window") return TDHO_FUNCTIONAL_MAX;
    if (name == "mean" || name == "mean-over-window") return TDHO_FUNCTIONAL_MEAN;
    if (name == "at-time") return TDHO_FUNCTIONAL_AT_TIME;
    throw ConfigError("unknown functional '" + name + "' (max, mean, at-time)");
}

int run_select_vacuum(const Settings& s) {
    const std::vector<double> r_grid = s.list("r_grid", {0.0, 0.25, 0.5, 1.0});
    const std::vector<double> d_grid = s.list("delta_grid", {0.0});
    const tdho_functional f = functional_from(s.str("functional", "max"));

    Oscillator osc;
    build_oscillator(s, osc);
    Trajectory base;
    if (s.str("kind", "") == "desitter") {
        // The window is given in z; the base is the analytic mode on a uniform t grid.
        tdho_desitter_spec spec;
        check(tdho_derive_spec(s.num("H0", 1.0), s.num("msq", 2.0), s.num("k", 1.0), 0, &spec),
              "de Sitter spec");
        double t0 = 0.0, t1 = 0.0;
        check(tdho_time_at_z(&spec, s.num("z_start", 50.0), &t0), "z_start");
        check(tdho_time_at_z(&spec, s.num("z_end", 5.0), &t1), "z_end");
        std::vector<tdho_mode_sample> samples;
        for (double t : linspace(t0, t1, s.count("samples", 2001))) {
            tdho_mode_sample m;
            check(tdho_bunch_davies_mode(&spec, t, &m), "Bunch-Davies mode");
            samples.push_back(m);
        }
        check(tdho_trajectory_from_samples(osc.get(), samples.data(), samples.size(), base.out()),
              "trajectory");
    } else {
        integrate_base(s, osc, base);
    }
    tdho_mode_sample first, last;
    check(tdho_trajectory_sample(base.get(), 0, &first), "sample");
    check(tdho_trajectory_sample(base.get(), tdho_trajectory_size(base.get()) - 1, &last), "sample");

    Selection sel;
    check(tdho_scan_squeeze_grid(base.get(), r_grid.data(), r_grid.size(), d_grid.data(),
                                 d_grid.size(), f, first.t, last.t, s.num("t_star", first.t),
                                 sel.out()),
          "scan");
    tdho_selection_summary sum;
    check(tdho_selection_summary_get(sel.get(), &sum), "scan");
    std::cerr << "argmin r = " << fmt(sum.argmin_r) << ", delta = " << fmt(sum.argmin_delta)
              << ", value = " << fmt(sum.argmin_value) << ", margin = " << fmt(sum.margin) << '\n';
    Output(s.path("out"))
        .main(fetch_csv([&](char* b, size_t c, size_t* n) { return tdho_selection_csv(sel.get(), b, c, n); },
                        "selection csv"));
    return 0;
}

int run_verify(const Settings& s) {
    VerifyReport rep;
    check(tdho_run_invariant_suite(s.num("tol", 1e-12), rep.out()), "suite");
    const size_t n = tdho_verify_report_size(rep.get());
    std::string csv = "check,measured,relation,bound,status,gating\n";
    std::printf("%-36s %-24s %-4s %-10s %s\n", "check", "measured", "", "bound", "status");
    for (size_t i = 0; i < n; ++i) {
        tdho_check c;
        check(tdho_verify_report_check(rep.get(), i, &c), "suite");
        const char* rel = c.upper ? "<=" : ">=";
        const char* status = c.passed ? "pass" : (c.gating ? "FAIL" : "fail (info)");
        std::printf("%-36s %-24s %-4s %-10.3g %s\n", c.name, fmt(c.measured).c_str(), rel, c.bound,
                    status);
        csv += std::string(c.name) + ',' + fmt(c.measured) + ',' + rel + ',' + fmt(c.bound) + ',' +
               (c.passed ? "pass" : "fail") + ',' + (c.gating ? "gating" : "info") + '\n';
    }
    const bool ok = tdho_verify_report_passed(rep.get()) != 0;
    std::printf("%s\n", ok ? "all gating checks passed" : "verification FAILED");
    if (s.has("out")) Output(s.path("out")).main(csv);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lewis-Riesenfeld invariant states of time-dependent oscillators"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings settings;
    std::string config;
    app.add_option("--config", config, "INI file with [oscillator], [squeeze], [grid], [run]");
    struct Flag {
        const char* name;
        const char* key;
        const char* help;
    };
    const Flag flags[] = {
        {"--kind", "kind", "constant | tabulated | desitter"},
        {"--profile", "profile", "CSV with header t,omega_sq"},
        {"--omega", "omega", "frequency of the constant oscillator"},
        {"--m0", "m0", "mass scale"},
        {"--epsilon", "epsilon", "energy for the real squeeze branch"},
        {"--r", "r", "squeeze magnitude"},
        {"--delta", "delta", "squeeze phase"},
        {"--H0", "H0", "expansion rate"},
        {"--msq", "msq", "field mass squared"},
        {"--k", "k", "wavenumber, or comma list for desitter"},
        {"--t0", "t0", "start time"},
        {"--t-end", "t_end", "end time"},
        {"--t", "t", "single evaluation time (closed-form)"},
        {"--samples", "samples", "number of output samples"},
        {"--z-start", "z_start", "early-time z (>= 50 for the asymptotic seed)"},
        {"--z-end", "z_end", "late-time z"},
        {"--tol", "tol", "integrator tolerance"},
        {"--out", "out", "output CSV path (stdout if absent)"},
        {"--r-grid", "r_grid", "comma list of r values, must contain 0"},
        {"--delta-grid", "delta_grid", "comma list of delta values"},
        {"--functional", "functional", "max | mean | at-time"},
        {"--t-star", "t_star", "time for the at-time functional"},
    };
    for (const Flag& f : flags) app.add_option(f.name, settings.values[f.key], f.help);

    const std::pair<const char*, int (*)(const Settings&)> commands[] = {
        {"evolve", run_evolve},
        {"closed-form", run_closed_form},
        {"desitter", run_desitter},
        {"select-vacuum", run_select_vacuum},
        {"verify", run_verify},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, fn] : commands) subs[name] = app.add_subcommand(name);
    subs["evolve"]->description("integrate a mode and write trajectory and reports");
    subs["closed-form"]->description("closed forms of the stationary oscillator");
    subs["desitter"]->description("Bunch-Davies k-scan and integrator comparison");
    subs["select-vacuum"]->description("minimum-uncertainty scan over squeeze parameters");
    subs["verify"]->description("run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!config.empty()) settings.load_ini(config);
        for (const auto& [name, fn] : commands)
            if (subs[name]->parsed()) return fn(settings);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const ApiError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
