// symdisc command line: run experiments, audit schemes, convergence sweeps
// and exact-solution samples.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "symdisc/audit.hpp"
#include "symdisc/config.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/exact.hpp"
#include "symdisc/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kAuditFailed = 1;
constexpr int kConfigError = 2;
constexpr int kNumericalFailure = 3;

void write_file(const std::string& path, void (*writer)(const symdisc::RunOutput&, std::ostream&),
                const symdisc::RunOutput& out) {
    std::ofstream f(path);
    if (!f) throw symdisc::ConfigError("cannot write " + path);
    writer(out, f);
}

int cmd_run(const std::string& path, const std::string& output, const std::string& diagnostics) {
    symdisc::ExperimentConfig cfg = symdisc::load_config(path);
    if (!output.empty()) cfg.output = output;
    if (!diagnostics.empty()) cfg.diagnostics = diagnostics;
    const symdisc::RunOutput out = symdisc::run_experiment(cfg);
    write_file(cfg.output, symdisc::write_snapshots_csv, out);
    write_file(cfg.diagnostics, symdisc::write_diagnostics_csv, out);
    std::printf("status: %s\n", out.status.c_str());
    if (!out.message.empty()) std::printf("message: %s\n", out.message.c_str());
    // the ODE runs march in x
    if (cfg.equation == "kdv" || cfg.equation == "burgers")
        std::printf("final t: %.10g\n", out.final_state.t);
    else if (!out.final_state.x.empty())
        std::printf("final x: %.10g\n", out.final_state.x.back());
    std::printf("steps: %zu\nsnapshots: %zu -> %s\ndiagnostics: -> %s\n", out.diagnostics.size(),
                out.snapshots.size(), cfg.output.c_str(), cfg.diagnostics.c_str());
    return out.ok() ? kOk : kNumericalFailure;
}

int cmd_audit(const std::string& scheme, int configs, int trials, std::uint64_t seed, double tol) {
    symdisc::AuditOptions opt;
    opt.configurations = configs;
    opt.elements = trials;
    opt.seed = seed;
    opt.tol = tol;
    const symdisc::AuditReport r = symdisc::invariance_audit(scheme, opt);
    std::printf("scheme %s (%s), tol %.3g, resampled %d\n", r.scheme.c_str(), r.kind.c_str(), r.tol, r.resampled);
    std::printf("%-12s %14s %8s  %s\n", "direction", "max_dev", "trials", "result");
    for (const auto& d : r.directions)
        std::printf("%-12s %14.6e %8d  %s\n", d.name.c_str(), d.max_deviation, d.trials, d.passed ? "pass" : "FAIL");
    if (scheme == "naive-kdv")
        std::printf("boost prediction error: %.3e\n", r.boost_prediction_error);
    std::printf("overall: %s\n", r.passed ? "pass" : "FAIL");
    return r.passed ? kOk : kAuditFailed;
}

int cmd_converge(const std::string& scheme, std::vector<double> hs) {
    if (hs.empty()) hs = symdisc::default_h_list(scheme);
    const auto rows = symdisc::convergence_study(scheme, hs);
    std::printf("h,error,order\n");
    for (const auto& r : rows) std::printf("%.17g,%.17g,%.6g\n", r.h, r.error, r.order);
    return kOk;
}

struct ExactArgs {
    std::string equation = "schwarzian";
    double t = 0.0, x_min = 0.0, x_max = 1.0;
    int n = 101;
    std::vector<double> params;  // per equation, see help text
};

int cmd_exact(const ExactArgs& a) {
    if (a.n < 2) throw symdisc::ConfigError("--n must be at least 2");
    if (!(a.x_min < a.x_max)) throw symdisc::ConfigError("--x-min must be below --x-max");
    auto param = [&](std::size_t i, double dflt) { return i < a.params.size() ? a.params[i] : dflt; };
    std::printf("t,x,u\n");
    for (int j = 0; j < a.n; ++j) {
        const double x = a.x_min + (a.x_max - a.x_min) * j / (a.n - 1);
        double u = 0.0;
        if (a.equation == "schwarzian") {
            try {
                u = symdisc::exact_schwarzian(x, param(0, 1), param(1, 0), param(2, 0), param(3, 1));
            } catch (const symdisc::PoleError&) {
                u = NAN;
            }
        } else if (a.equation == "kdv") {
            u = symdisc::exact_kdv_double_soliton(a.t, x, {param(0, 1), param(1, 0.5), param(2, 20), param(3, 5)});
        } else if (a.equation == "burgers") {
            u = symdisc::exact_burgers(a.t, x, param(0, 0.001), param(1, 0.25));
        } else {
            throw symdisc::ConfigError("unknown equation '" + a.equation + "'");
        }
        std::printf("%.17g,%.17g,%.17g\n", a.t, x, u);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry-preserving discretizations: runs, audits and convergence studies"};
    app.require_subcommand(1);

    std::string config, output, diagnostics;
    auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
    run->add_option("config", config, "key = value config file")->required();
    run->add_option("--output", output, "Snapshot CSV path (overrides the config)");
    run->add_option("--diagnostics", diagnostics, "Diagnostics CSV path (overrides the config)");

    std::string audit_scheme;
    int trials = 100, configs = 20;
    std::uint64_t seed = 1;
    double tol = 1e-9;
    auto* audit = app.add_subcommand("audit", "Check a scheme against random group transformations");
    audit->add_option("--scheme", audit_scheme, "Scheme id")->required()->check(CLI::IsMember(symdisc::audit_schemes()));
    audit->add_option("--trials", trials, "Group elements per configuration and direction")->check(CLI::PositiveNumber);
    audit->add_option("--configs", configs, "Random configurations")->check(CLI::PositiveNumber);
    audit->add_option("--seed", seed, "Generator seed");
    audit->add_option("--tol", tol, "Relative deviation tolerance")->check(CLI::PositiveNumber);

    std::string conv_scheme;
    std::vector<double> hs;
    auto* converge = app.add_subcommand("converge", "Observed order of accuracy against an exact solution");
    converge->set_help_flag("--help", "Print this help message and exit");  // frees --h
    converge->add_option("--scheme", conv_scheme, "schwarzian, schwarzian-tan, naive-kdv or constant")->required();
    converge->add_option("--h", hs, "Comma separated mesh sizes")->delimiter(',');

    ExactArgs ex;
    auto* exact = app.add_subcommand("exact", "Sample an exact solution as CSV");
    exact->add_option("--equation", ex.equation, "schwarzian, kdv or burgers")->required();
    exact->add_option("--t", ex.t, "Time (kdv, burgers)");
    exact->add_option("--x-min", ex.x_min, "Left end");
    exact->add_option("--x-max", ex.x_max, "Right end");
    exact->add_option("--n", ex.n, "Number of samples");
    exact->add_option("--params", ex.params,
                      "schwarzian: a,b,c,d  kdv: c1,c2,a1,a2  burgers: nu,c")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*run) return cmd_run(config, output, diagnostics);
        if (*audit) return cmd_audit(audit_scheme, configs, trials, seed, tol);
        if (*converge) return cmd_converge(conv_scheme, hs);
        return cmd_exact(ex);
    } catch (const symdisc::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfigError;
    } catch (const symdisc::Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kNumericalFailure;
    }
}
