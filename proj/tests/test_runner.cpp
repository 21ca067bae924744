#include <cmath>
#include <sstream>

#include "doctest.h"
#include "symdisc/audit.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/exact.hpp"
#include "symdisc/runner.hpp"

using namespace symdisc;
using doctest::Approx;

namespace {

RunOutput run(const std::string& text) { return run_experiment(parse_config(text)); }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("exact solutions") {
    CHECK(exact_schwarzian(0.3, 1, 0, 0, 1) == Approx(std::tan(0.3)));
    CHECK_THROWS_AS(exact_schwarzian(M_PI / 2, 1, 0, 0, 1), PoleError);

    // a lone soliton of speed c has height c/2 and moves at speed c
    DoubleSoliton one{1.0, 0.0, 0.0, 0.0};
    CHECK(exact_kdv_double_soliton(0, 0, one) == Approx(0.5));
    CHECK(exact_kdv_double_soliton(3, 3, one) == Approx(0.5));

    CHECK(exact_burgers(0, 0, 0.01, 0.25) == Approx(0).epsilon(1e-14));
    CHECK(exact_burgers(0.1, -0.3, 0.001, 0.25) == Approx(1));
    CHECK(exact_burgers(0.1, 0.3, 0.001, 0.25) == Approx(-1));
    CHECK(std::isfinite(exact_burgers(0.5, 0.49, 1e-4, 0.25)));
}

TEST_CASE("exact solutions satisfy their equations") {
    // fourth-order central differences
    auto d1 = [](auto f, double x, double h) { return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h); };
    auto d2 = [](auto f, double x, double h) {
        return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) / (12 * h * h);
    };
    auto d3 = [](auto f, double x, double h) {
        return (f(x - 3 * h) - 8 * f(x - 2 * h) + 13 * f(x - h) - 13 * f(x + h) + 8 * f(x + 2 * h) - f(x + 3 * h)) /
               (8 * h * h * h);
    };
    const double h = 1e-3;
    const DoubleSoliton one{1.0, 0.0, 0.0, 0.0};
    for (double t : {0.0, 1.3})
        for (double x : {-2.0, -0.4, 0.5, 3.0}) {
            auto ux = [&](double y) { return exact_kdv_double_soliton(t, y, one); };
            auto ut = [&](double s) { return exact_kdv_double_soliton(s, x, one); };
            CHECK(std::abs(d1(ut, t, h) + 6 * ux(x) * d1(ux, x, h) + d3(ux, x, h)) <= 1e-6);
        }
    const double nu = 0.05;
    for (double t : {0.0, 0.3})
        for (double x : {-0.2, -0.05, 0.1, 0.3}) {
            auto ux = [&](double y) { return exact_burgers(t, y, nu, 0.25); };
            auto ut = [&](double s) { return exact_burgers(s, x, nu, 0.25); };
            CHECK(std::abs(d1(ut, t, h) + ux(x) * d1(ux, x, h) - nu * d2(ux, x, h)) <= 1e-6);
        }
}

TEST_CASE("total variation and maxima") {
    CHECK(total_variation({0, 1, -1, 2}) == Approx(6));
    CHECK(total_variation({}) == 0);
    const std::vector<std::size_t> m = local_maxima({0, 1, 0, 0.2, 0.1, 3, 0}, 0.05);
    REQUIRE(m.size() == 3);
    CHECK(m[2] == 5);
    CHECK(local_maxima({0, 1, 0, 0.2, 0.1, 3, 0}, 0.1).size() == 2);
    CHECK(local_maxima({0, 1, 0, 0.2, 0.1, 3, 0}, 0.5).size() == 1);
}

TEST_CASE("config parsing") {
    const ExperimentConfig c = parse_config("equation = kdv  # comment\nalpha = 5\nN = 64\n");
    CHECK(c.N == 64);
    CHECK(c.alpha == 5);
    CHECK(c.scheme == "10pt");
    const ExperimentConfig b = parse_config("equation = burgers\nalpha = 0.5");
    CHECK(b.C == 0.4);
    CHECK(b.domain_a == -0.5);

    CHECK_THROWS_AS(parse_config("equation = kdv\nalpha = 1\nbogus = 1"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = kdv\nalpha = 1\nN = 4"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = kdv\nalpha = 1\nN = 12.5"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = kdv\nalpha = 1\nC = abc"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = kdv\nalpha = 1\nalpha = 2"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = kdv\nalpha = 1\nnonsense"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = kdv\nalpha = 1\ndomain_a = 2\ndomain_b = 1"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = kdv"), ConfigError);  // adaptive without alpha
    CHECK_THROWS_AS(parse_config("equation = heat"), ConfigError);
    CHECK_THROWS_AS(parse_config("equation = burgers\nalpha = 1\nlimiter = vanleer"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);
}

TEST_CASE("constant kdv run stays constant") {
    const RunOutput out =
        run("equation = kdv\nic = constant\nic_value = 0.2\nalpha = 10\nN = 32\ndomain_a = -5\ndomain_b = 5\n"
            "final_time = 0.5\nC = 0.5");
    REQUIRE(out.ok());
    for (double v : out.final_state.u) CHECK(v == Approx(0.2).epsilon(1e-12));
    CHECK(out.final_state.t == Approx(0.5));
}

TEST_CASE("runs are deterministic and write csv") {
    const std::string cfg =
        "equation = burgers\nalpha = 0.5\nN = 40\nfinal_time = 0.05\nnu = 0.01\n";
    const RunOutput a = run(cfg), b = run(cfg);
    REQUIRE(a.ok());
    CHECK(a.final_state.u == b.final_state.u);
    CHECK(a.final_state.x == b.final_state.x);
    CHECK(a.max_equidistribution_residual <= 1e-10);

    std::ostringstream s, d, s2;
    write_snapshots_csv(a, s);
    write_diagnostics_csv(a, d);
    write_snapshots_csv(b, s2);
    CHECK(s.str() == s2.str());
    CHECK(first_line(s.str()) == "t,x,u");
    CHECK(first_line(d.str()) == "step,t,min_spacing,tv,residual_inf,newton_iters,status");
    CHECK(a.snapshots.size() >= 2);
}

TEST_CASE("projection keeps the uniform mesh") {
    const RunOutput out = run(
        "equation = kdv\nstrategy = projection\nN = 48\ndomain_a = -15\ndomain_b = 15\nfinal_time = 0.5\n"
        "c1 = 1\nc2 = 0.5\na1 = 5\na2 = -5");
    REQUIRE(out.ok());
    for (const GridState& g : out.snapshots) {
        REQUIRE(g.size() == 48);
        for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.x[i] == out.snapshots.front().x[i]);
    }
    for (std::size_t j = 1; j < out.snapshots.size(); ++j) CHECK(out.snapshots[j].t > out.snapshots[j - 1].t);
}

TEST_CASE("schwarzian and uxx runs") {
    const RunOutput s = run("equation = schwarzian\ndomain_b = 1\nh = 0.01");
    REQUIRE(s.ok());
    CHECK(s.final_state.u.back() == Approx(std::tan(1.0)).epsilon(1e-2));

    const RunOutput r = run("equation = schwarzian\nscheme = rk45\ndomain_b = 3");
    CHECK_FALSE(r.ok());
    CHECK(r.status == "divergence");
    CHECK_FALSE(r.snapshots.empty());

    const RunOutput u = run("equation = uxx\nN = 20\nuxx_f = 1.1\nuxx_slope = 2\nuxx_intercept = -1");
    REQUIRE(u.ok());
    for (std::size_t i = 0; i < u.final_state.size(); ++i)
        CHECK(u.final_state.u[i] == Approx(2 * u.final_state.x[i] - 1));
}

TEST_CASE("tangling ends the run with partial output") {
    const RunOutput out = run(
        "equation = kdv\nstrategy = lagrangian\nN = 64\ndomain_a = -20\ndomain_b = 20\nC = 0.1\nfinal_time = 200\n"
        "c1 = 4\nc2 = 1\na1 = 5\na2 = -5\ntangling_factor = 0.2");
    CHECK(out.status == "tangled");
    CHECK_FALSE(out.snapshots.empty());
    CHECK(out.final_state.t < 200);
}

TEST_CASE("audits of the invariant schemes pass") {
    AuditOptions opt;
    opt.configurations = 5;
    opt.elements = 20;
    for (const std::string& id : audit_schemes()) {
        if (id == "naive-kdv") continue;
        const AuditReport r = invariance_audit(id, opt);
        INFO(id);
        CHECK(r.passed);
        for (const AuditDirection& d : r.directions) CHECK(d.max_deviation <= opt.tol);
    }
    CHECK_THROWS_AS(invariance_audit("nope", opt), ConfigError);
}

TEST_CASE("convergence studies") {
    const std::vector<ConvergenceRow> c = convergence_study("constant", {0.4, 0.2});
    for (const ConvergenceRow& r : c) CHECK(r.error <= 1e-14);

    const std::vector<ConvergenceRow> s = convergence_study("schwarzian", default_h_list("schwarzian"));
    REQUIRE(s.size() == 3);
    CHECK(std::isnan(s[0].order));
    CHECK(s[2].order > 0.5);
    CHECK(s[2].error < s[0].error);
    CHECK_THROWS_AS(convergence_study("heat", {0.1}), ConfigError);
}
