#include "symdisc/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "symdisc/burgers.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/exact.hpp"
#include "symdisc/kdv.hpp"
#include "symdisc/mesh.hpp"
#include "symdisc/rk45.hpp"
#include "symdisc/schwarzian.hpp"

namespace symdisc {

namespace {

long steps_for(double T, double kmax) { return std::max(1L, static_cast<long>(std::ceil(T / kmax - 1e-9))); }

long cadence_for(const ExperimentConfig& c, long steps) {
    if (c.snapshot_every > 0) return c.snapshot_every;
    return std::max(1L, (steps + 199) / 200);
}

std::vector<double> scaled(const std::vector<double>& v, double s) {
    std::vector<double> out(v);
    for (double& x : out) x *= s;
    return out;
}

// Records a numerical failure as the run's terminal status.
void record_failure(RunOutput& out, long step, double t, const std::exception& e) {
    if (dynamic_cast<const MeshTangling*>(&e)) out.status = "tangled";
    else if (dynamic_cast<const NewtonDivergence*>(&e) || dynamic_cast<const SingularSystem*>(&e))
        out.status = "newton_divergence";
    else out.status = "divergence";
    out.message = e.what();
    DiagnosticRow row;
    row.step = step;
    row.t = t;
    row.status = out.status;
    if (!out.diagnostics.empty()) {
        row.min_spacing = out.diagnostics.back().min_spacing;
        row.tv = out.diagnostics.back().tv;
    }
    out.diagnostics.push_back(row);
}

RunOutput run_kdv(const ExperimentConfig& c) {
    RunOutput out;
    const bool naive = c.scheme == "naive";
    const double mu = c.kdv_nonlinearity;
    const int N = c.N;
    // the naive scheme is periodic: N nodes, the right end identified with the left
    const double h0 = (c.domain_b - c.domain_a) / (naive ? N : N - 1);
    out.initial_spacing = h0;
    const DoubleSoliton ds{c.c1, c.c2, c.a1, c.a2};

    GridState s;
    s.x.resize(N);
    s.u.resize(N);
    for (int j = 0; j < N; ++j) {
        s.x[j] = c.domain_a + j * h0;
        s.u[j] = mu * (c.ic == "constant" ? c.ic_value : exact_kdv_double_soliton(0.0, s.x[j], ds));
    }
    const long steps = steps_for(c.final_time, c.C * h0 * h0 * h0);
    const double k = c.final_time / static_cast<double>(steps);
    const long every = cadence_for(c, steps);

    KdVStepOptions opt;
    opt.scheme = c.scheme == "6pt" ? KdVScheme::SixPoint : KdVScheme::TenPoint;
    opt.strategy = c.strategy == "lagrangian" ? MeshStrategy::Lagrangian
                   : c.strategy == "projection" ? MeshStrategy::Projection
                                                : MeshStrategy::Adaptive;
    opt.alpha = c.alpha;
    opt.tangling_floor = c.tangling_factor * h0;
    opt.newton.tol = c.newton_tol;
    opt.newton.max_iter = c.newton_max_iter;

    auto snapshot = [&](const GridState& g) { out.snapshots.push_back({g.t, g.x, scaled(g.u, 1 / mu)}); };
    snapshot(s);
    for (long n = 1; n <= steps; ++n) {
        DiagnosticRow row;
        row.step = n;
        try {
            if (naive) {
                s = naive_kdv_step(s, k, h0);
                row.min_spacing = h0;
            } else {
                KdVStepResult r = kdv_step(s, k, opt);
                row.min_spacing = r.min_spacing;
                row.residual_inf = r.residual_inf;
                row.newton_iters = r.newton_iters;
                out.max_equidistribution_residual =
                    std::max(out.max_equidistribution_residual, r.equidistribution_residual);
                s = std::move(r.next);
            }
        } catch (const Error& e) {
            record_failure(out, n, s.t + k, e);
            break;
        }
        if (n == steps) s.t = c.final_time;
        row.t = s.t;
        row.tv = total_variation(s.u) / mu;
        const bool finite = std::all_of(s.u.begin(), s.u.end(), [](double v) { return std::isfinite(v); });
        if (!finite) {
            record_failure(out, n, s.t, Divergence("non-finite solution"));
            break;
        }
        out.diagnostics.push_back(row);
        if (n % every == 0 || n == steps) snapshot(s);
    }
    if (out.snapshots.back().t != s.t) snapshot(s);
    out.final_state = out.snapshots.back();
    return out;
}

RunOutput run_burgers(const ExperimentConfig& c) {
    RunOutput out;
    const int N = c.N;
    const double h0 = (c.domain_b - c.domain_a) / (N - 1);
    out.initial_spacing = h0;
    GridState s;
    s.x.resize(N);
    s.u.resize(N);
    auto exact = [&](double t, double x) {
        return c.ic == "constant" ? c.ic_value : exact_burgers(t, x, c.nu, c.burgers_c);
    };
    for (int j = 0; j < N; ++j) {
        s.x[j] = c.domain_a + j * h0;
        s.u[j] = exact(0.0, s.x[j]);
    }
    s.x.back() = c.domain_b;
    const long steps = steps_for(c.final_time, c.C * h0 * h0);
    const double k = c.final_time / static_cast<double>(steps);
    const long every = cadence_for(c, steps);
    BurgersOptions opt;
    opt.nu = c.nu;
    opt.alpha = c.alpha;
    opt.limiter = parse_limiter(c.limiter);
    opt.theta_index = parse_theta_index(c.theta_index);

    out.snapshots.push_back(s);
    for (long n = 1; n <= steps; ++n) {
        const double tn = n == steps ? c.final_time : s.t + k;
        BurgersBoundary bc{c.domain_a, c.domain_b, exact(tn, c.domain_a), exact(tn, c.domain_b)};
        DiagnosticRow row;
        row.step = n;
        try {
            BurgersStepResult r = burgers_fv_step(s, k, bc, opt);
            row.min_spacing = r.min_spacing;
            out.max_equidistribution_residual =
                std::max(out.max_equidistribution_residual, r.equidistribution_residual);
            s = std::move(r.next);
        } catch (const Error& e) {
            record_failure(out, n, tn, e);
            break;
        }
        s.t = tn;
        row.t = tn;
        row.tv = total_variation(s.u);
        if (!std::all_of(s.u.begin(), s.u.end(), [](double v) { return std::isfinite(v); })) {
            record_failure(out, n, tn, Divergence("non-finite solution"));
            break;
        }
        out.diagnostics.push_back(row);
        if (n % every == 0 || n == steps) out.snapshots.push_back(s);
    }
    if (out.snapshots.back().t != s.t) out.snapshots.push_back(s);
    out.final_state = out.snapshots.back();
    return out;
}

RunOutput run_schwarzian(const ExperimentConfig& c) {
    RunOutput out;
    const double F = c.schwarzian_F;
    const double a = c.domain_a, b = c.domain_b, h = c.h;
    out.initial_spacing = h;
    GridState g;
    if (c.scheme == "rk45") {
        const double t0 = std::tan(a), s2 = 1 + t0 * t0;
        const RkResult r = rk_adaptive_solve(schwarzian_rhs([F](double) { return F; }), {t0, s2, 2 * s2 * t0},
                                             a, b, c.rel_tol);
        double tv = 0.0;
        for (std::size_t j = 0; j < r.xs.size(); ++j) {
            g.x.push_back(r.xs[j]);
            g.u.push_back(r.ys[j][0]);
            if (j > 0) {
                tv += std::abs(g.u[j] - g.u[j - 1]);
                out.diagnostics.push_back({static_cast<long>(j), r.xs[j], r.xs[j] - r.xs[j - 1], tv, 0.0, 0, "ok"});
            }
        }
        if (r.diverged) {
            out.status = "divergence";
            out.message = r.reason + " at x = " + std::to_string(r.x_stop);
            out.diagnostics.push_back({static_cast<long>(r.xs.size()), r.x_stop, 0.0, tv, 0.0, 0, "divergence"});
        }
    } else {
        try {
            const SchwarzianRun r = schwarzian_solve([F](double) { return F; }, a, b, h, std::tan(a),
                                                     std::tan(a + h), std::tan(a + 2 * h));
            g.x = r.x;
            g.u = r.u;
            double tv = 0.0;
            for (std::size_t j = 1; j < g.u.size(); ++j) {
                tv += std::abs(g.u[j] - g.u[j - 1]);
                DiagnosticRow row{static_cast<long>(j), g.x[j], h, tv, 0.0, 0, "ok"};
                if (j >= 3) {
                    row.residual_inf = std::abs(
                        schwarzian_invariant_residual(g.u[j - 3], g.u[j - 2], g.u[j - 1], g.u[j], h, F));
                    if ((g.u[j] - g.u[j - 1]) * (g.u[j - 1] - g.u[j - 2]) < 0) row.status = "pole";
                }
                out.diagnostics.push_back(row);
            }
        } catch (const Error& e) {
            record_failure(out, static_cast<long>(g.u.size()), a, e);
        }
    }
    out.snapshots.push_back(g);
    out.final_state = g;
    return out;
}

RunOutput run_uxx(const ExperimentConfig& c) {
    RunOutput out;
    const double h0 = (c.domain_b - c.domain_a) / (c.N - 1);
    out.initial_spacing = h0;
    GridState g;
    g.x = {c.domain_a, c.domain_a + h0};
    for (double x : g.x) g.u.push_back(c.uxx_slope * x + c.uxx_intercept);
    for (int j = 2; j < c.N; ++j) {
        const UxxStep s = uxx_step(g.x[j - 2], g.x[j - 1], g.u[j - 2], g.u[j - 1], c.uxx_f);
        g.x.push_back(s.x_next);
        g.u.push_back(s.u_next);
        const double exact = c.uxx_slope * s.x_next + c.uxx_intercept;
        out.diagnostics.push_back({j - 1L, s.x_next, s.x_next - g.x[j - 1], total_variation(g.u),
                                   std::abs(s.u_next - exact), 0, "ok"});
    }
    out.snapshots.push_back(g);
    out.final_state = g;
    return out;
}

void put(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

}  // namespace

RunOutput run_experiment(const ExperimentConfig& cfg) {
    check_config(cfg);
    if (cfg.equation == "kdv") return run_kdv(cfg);
    if (cfg.equation == "burgers") return run_burgers(cfg);
    if (cfg.equation == "schwarzian") return run_schwarzian(cfg);
    return run_uxx(cfg);
}

void write_snapshots_csv(const RunOutput& out, std::ostream& os) {
    os << "t,x,u\n";
    for (const GridState& g : out.snapshots) {
        for (std::size_t i = 0; i < g.x.size(); ++i) {
            put(os, g.t);
            os << ',';
            put(os, g.x[i]);
            os << ',';
            put(os, g.u[i]);
            os << '\n';
        }
    }
}

void write_diagnostics_csv(const RunOutput& out, std::ostream& os) {
    os << "step,t,min_spacing,tv,residual_inf,newton_iters,status\n";
    for (const DiagnosticRow& r : out.diagnostics) {
        os << r.step << ',';
        put(os, r.t);
        os << ',';
        put(os, r.min_spacing);
        os << ',';
        put(os, r.tv);
        os << ',';
        put(os, r.residual_inf);
        os << ',' << r.newton_iters << ',' << r.status << '\n';
    }
}

std::vector<std::size_t> local_maxima(const std::vector<double>& u, double threshold) {
    std::vector<std::size_t> out;
    if (u.size() < 3) return out;
    const double top = *std::max_element(u.begin(), u.end());
    for (std::size_t i = 1; i + 1 < u.size(); ++i)
        if (u[i] > u[i - 1] && u[i] >= u[i + 1] && u[i] > threshold * top) out.push_back(i);
    return out;
}

}  // namespace symdisc
