#include "symdisc/audit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "symdisc/burgers.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/exact.hpp"
#include "symdisc/groups.hpp"
#include "symdisc/kdv.hpp"
#include "symdisc/schwarzian.hpp"

namespace symdisc {

double relative_deviation(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<std::string> audit_schemes() {
    return {"schwarzian", "schwarzian-invariant", "schwarzian-invariantized", "uxx",
            "kdv-6pt",    "kdv-10pt",             "burgers",                  "naive-kdv"};
}

namespace {

// A direction draws a random element of one subgroup; it returns the
// deviation for one (configuration, element) pair.
template <class Config, class Element>
struct Direction {
    std::string name;
    std::function<Element(Rng&)> draw;
};

template <class Config, class Element>
AuditReport run_audit(const std::string& scheme, const std::string& kind, const AuditOptions& opt,
                      const std::function<Config(Rng&)>& sample,
                      const std::vector<Direction<Config, Element>>& dirs,
                      const std::function<double(const Config&, const Element&)>& deviation) {
    AuditReport rep;
    rep.scheme = scheme;
    rep.kind = kind;
    rep.tol = opt.tol;
    Rng rng(opt.seed);
    for (const auto& d : dirs) rep.directions.push_back({d.name, 0.0, 0, false});
    for (int c = 0; c < opt.configurations; ++c) {
        for (std::size_t di = 0; di < dirs.size(); ++di) {
            for (int e = 0; e < opt.elements;) {
                Config z = sample(rng);
                Element g = dirs[di].draw(rng);
                double dev;
                try {
                    dev = deviation(z, g);
                } catch (const Error&) {
                    ++rep.resampled;
                    if (rep.resampled > 100 * opt.configurations * opt.elements)
                        throw ProjectionFailure("audit: too many degenerate draws");
                    continue;
                }
                if (!std::isfinite(dev)) dev = std::numeric_limits<double>::infinity();
                auto& row = rep.directions[di];
                row.max_deviation = std::max(row.max_deviation, dev);
                ++row.trials;
                ++e;
            }
        }
    }
    rep.passed = true;
    for (auto& row : rep.directions) {
        row.passed = row.max_deviation <= opt.tol;
        rep.passed = rep.passed && row.passed;
    }
    return rep;
}

// --- SL(2) -------------------------------------------------------------------------

struct SL2Config {
    double um1, u0, u1, u2, h, F;
};

SL2Config sample_sl2(Rng& rng) {
    SL2Config c;
    c.um1 = rng.uniform(-2, 2);
    c.u0 = rng.uniform(-2, 2);
    c.u1 = rng.uniform(-2, 2);
    c.u2 = rng.uniform(-2, 2);
    c.h = rng.uniform(0.1, 1);
    c.F = rng.uniform(-2, 2);
    return c;
}

std::vector<Direction<SL2Config, SL2Element>> sl2_directions() {
    return {
        {"identity", [](Rng&) { return SL2Element::identity(); }},
        {"d_u", [](Rng& r) { return SL2Element{1, r.uniform(-2, 2), 0, 1}; }},
        {"u_d_u", [](Rng& r) {
             const double s = std::exp(r.uniform(-0.5, 0.5));
             return SL2Element{s, 0, 0, 1 / s};
         }},
        {"uu_d_u", [](Rng& r) { return SL2Element{1, 0, -r.uniform(-0.5, 0.5), 1}; }},
        {"full", [](Rng& r) { return random_sl2(r); }},
    };
}

AuditReport audit_sl2(const std::string& scheme, const AuditOptions& opt) {
    std::function<double(const SL2Config&, const SL2Element&)> dev;
    std::string kind = "strong";
    if (scheme == "schwarzian") {
        kind = "weak";
        dev = [](const SL2Config& c, const SL2Element& g) {
            const double w = schwarzian_step(c.um1, c.u0, c.u1, c.h, c.F).u_next;
            const double wg = schwarzian_step(apply_sl2(g, c.um1), apply_sl2(g, c.u0), apply_sl2(g, c.u1), c.h, c.F).u_next;
            return relative_deviation(wg, apply_sl2(g, w));
        };
    } else {
        auto res = scheme == "schwarzian-invariant" ? schwarzian_invariant_residual
                                                    : schwarzian_invariantized_residual;
        dev = [res](const SL2Config& c, const SL2Element& g) {
            const double r = res(c.um1, c.u0, c.u1, c.u2, c.h, c.F);
            const double rg = res(apply_sl2(g, c.um1), apply_sl2(g, c.u0), apply_sl2(g, c.u1),
                                  apply_sl2(g, c.u2), c.h, c.F);
            return relative_deviation(r, rg);
        };
    }
    return run_audit<SL2Config, SL2Element>(scheme, kind, opt, sample_sl2, sl2_directions(), dev);
}

// --- u_xx = 0 ---------------------------------------------------------------------

struct UxxConfig {
    double xm1, x0, um1, u0, f;
};

AuditReport audit_uxx(const AuditOptions& opt) {
    auto sample = [](Rng& r) {
        UxxConfig c;
        c.xm1 = r.uniform(-2, 2);
        c.x0 = c.xm1 + r.uniform(0.1, 2);
        c.um1 = r.uniform(-2, 2);
        c.u0 = r.uniform(-2, 2);
        c.f = r.uniform(0.2, 3);
        return c;
    };
    // orientation-preserving part: the step needs increasing abscissae
    std::vector<Direction<UxxConfig, AffineElement>> dirs = {
        {"identity", [](Rng&) { return AffineElement{}; }},
        {"d_x", [](Rng& r) { AffineElement g; g.a = r.uniform(-2, 2); return g; }},
        {"d_u", [](Rng& r) { AffineElement g; g.b = r.uniform(-2, 2); return g; }},
        {"x_d_x", [](Rng& r) { AffineElement g; g.lambda = std::exp(r.uniform(-0.5, 0.5)); return g; }},
        {"x_d_u", [](Rng& r) { AffineElement g; g.beta = r.uniform(-2, 2); return g; }},
        {"u_d_u", [](Rng& r) { AffineElement g; g.alpha = r.sign() * std::exp(r.uniform(-0.5, 0.5)); return g; }},
        {"full", [](Rng& r) { AffineElement g = random_affine(r); g.lambda = std::abs(g.lambda); return g; }},
    };
    auto dev = [](const UxxConfig& c, const AffineElement& g) {
        const UxxStep s = uxx_step(c.xm1, c.x0, c.um1, c.u0, c.f);
        const Node a = apply_affine(g, {0, c.xm1, c.um1}), b = apply_affine(g, {0, c.x0, c.u0});
        const UxxStep sg = uxx_step(a.x, b.x, a.u, b.u, c.f);
        const Node expect = apply_affine(g, {0, s.x_next, s.u_next});
        return std::max(relative_deviation(sg.x_next, expect.x), relative_deviation(sg.u_next, expect.u));
    };
    return run_audit<UxxConfig, AffineElement>("uxx", "weak", opt, sample, dirs, dev);
}

// --- KdV --------------------------------------------------------------------------

struct KdVConfig {
    GridState prev, next;
};

GridState random_row(Rng& r, double t, int n) {
    GridState g;
    g.t = t;
    double x = r.uniform(-2, 2);
    for (int i = 0; i < n; ++i) {
        g.x.push_back(x);
        g.u.push_back(r.uniform(-2, 2));
        x += r.uniform(0.1, 2);
    }
    return g;
}

KdVConfig sample_kdv(Rng& r) {
    const double t = r.uniform(-1, 1);
    KdVConfig c;
    c.prev = random_row(r, t, 9);
    c.next = random_row(r, t + r.uniform(0.1, 2), 9);
    return c;
}

GridState transform_kdv(const KdVGroupElement& g, const GridState& s) {
    GridState o = s;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Node z = apply_kdv(g, {s.t, s.x[i], s.u[i]});
        o.x[i] = z.x;
        o.u[i] = z.u;
    }
    o.t = apply_kdv(g, {s.t, 0, 0}).t;
    return o;
}

std::vector<Direction<KdVConfig, KdVGroupElement>> kdv_directions() {
    return {
        {"identity", [](Rng&) { return KdVGroupElement{}; }},
        {"d_x", [](Rng& r) { KdVGroupElement g; g.a = r.uniform(-2, 2); return g; }},
        {"d_t", [](Rng& r) { KdVGroupElement g; g.b = r.uniform(-2, 2); return g; }},
        {"galilean", [](Rng& r) { KdVGroupElement g; g.v = r.uniform(-2, 2); return g; }},
        {"scaling", [](Rng& r) { KdVGroupElement g; g.lambda = std::exp(r.uniform(-0.5, 0.5)); return g; }},
        {"full", [](Rng& r) { return random_kdv(r); }},
    };
}

AuditReport audit_kdv(const std::string& scheme, const AuditOptions& opt) {
    auto form = scheme == "kdv-6pt" ? kdv_scheme_invariant_6pt : kdv_scheme_invariant_10pt;
    auto dev = [form](const KdVConfig& c, const KdVGroupElement& g) {
        const GridState p = transform_kdv(g, c.prev), q = transform_kdv(g, c.next);
        double m = 0.0;
        for (std::size_t i = 2; i + 2 < c.prev.size(); ++i)
            m = std::max(m, relative_deviation(form(kdv_stencil_at(c.prev, c.next, i)),
                                               form(kdv_stencil_at(p, q, i))));
        return m;
    };
    return run_audit<KdVConfig, KdVGroupElement>(scheme, "strong", opt, sample_kdv, kdv_directions(), dev);
}

// Naive scheme: periodic uniform rows, boost deviation checked against its
// closed form as well.
struct NaiveConfig {
    GridState prev, next;
    double h, k;
};

AuditReport audit_naive(const AuditOptions& opt) {
    auto sample = [](Rng& r) {
        NaiveConfig c;
        c.h = r.uniform(0.1, 2);
        c.k = r.uniform(0.1, 2);
        const double t = r.uniform(-1, 1), x0 = r.uniform(-2, 2);
        c.prev.t = t;
        c.next.t = t + c.k;
        for (int i = 0; i < 12; ++i) {
            c.prev.x.push_back(x0 + i * c.h);
            c.next.x.push_back(x0 + i * c.h);
            c.prev.u.push_back(r.uniform(-2, 2));
            c.next.u.push_back(r.uniform(-2, 2));
        }
        return c;
    };
    std::vector<Direction<NaiveConfig, KdVGroupElement>> dirs = {
        {"identity", [](Rng&) { return KdVGroupElement{}; }},
        {"d_x", [](Rng& r) { KdVGroupElement g; g.a = r.uniform(-2, 2); return g; }},
        {"d_t", [](Rng& r) { KdVGroupElement g; g.b = r.uniform(-2, 2); return g; }},
        {"galilean", [](Rng& r) { KdVGroupElement g; g.v = r.uniform(-2, 2); return g; }},
    };
    double pred_err = 0.0;
    auto dev = [&pred_err](const NaiveConfig& c, const KdVGroupElement& g) {
        const std::vector<double> r = naive_kdv_residual(c.prev, c.next, c.k, c.h);
        const std::vector<double> rg =
            naive_kdv_residual(transform_kdv(g, c.prev), transform_kdv(g, c.next), c.k, c.h);
        const std::size_t n = r.size();
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            m = std::max(m, relative_deviation(r[i], rg[i]));
            const double slope = (c.prev.u[(i + 1) % n] - c.prev.u[(i + n - 1) % n]) / (2 * c.h);
            pred_err = std::max(pred_err, std::abs((rg[i] - r[i]) - g.v * slope));
        }
        return m;
    };
    AuditReport rep = run_audit<NaiveConfig, KdVGroupElement>("naive-kdv", "strong", opt, sample, dirs, dev);
    rep.boost_prediction_error = pred_err;
    return rep;
}

// --- Burgers ------------------------------------------------------------------------

struct BurgersConfig {
    GridState prev;
    double k;
    BurgersBoundary bc;
    BurgersOptions opt;
};

AuditReport audit_burgers(const AuditOptions& opt) {
    auto sample = [](Rng& r) {
        BurgersConfig c;
        c.prev = random_row(r, r.uniform(-1, 1), 9);
        c.k = r.uniform(0.05, 0.5);
        c.bc.x_left = c.prev.x.front() + r.uniform(-0.05, 0.05);
        c.bc.x_right = c.prev.x.back() + r.uniform(-0.05, 0.05);
        c.bc.u_left = r.uniform(-2, 2);
        c.bc.u_right = r.uniform(-2, 2);
        c.opt.nu = r.uniform(0, 0.1);
        c.opt.alpha = r.uniform(0, 2);
        return c;
    };
    std::vector<Direction<BurgersConfig, BurgersGroupElement>> dirs = {
        {"identity", [](Rng&) { return BurgersGroupElement{}; }},
        {"d_x", [](Rng& r) { BurgersGroupElement g; g.eps1 = r.uniform(-2, 2); return g; }},
        {"d_t", [](Rng& r) { BurgersGroupElement g; g.eps2 = r.uniform(-2, 2); return g; }},
        {"galilean", [](Rng& r) { BurgersGroupElement g; g.eps3 = r.uniform(-2, 2); return g; }},
        {"scaling", [](Rng& r) { BurgersGroupElement g; g.eps4 = r.uniform(-0.5, 0.5); return g; }},
        {"full", [](Rng& r) { return random_burgers(r); }},
    };
    auto dev = [](const BurgersConfig& c, const BurgersGroupElement& g) {
        const GridState s = burgers_fv_step(c.prev, c.k, c.bc, c.opt).next;
        GridState pg = c.prev;
        for (std::size_t i = 0; i < pg.size(); ++i) {
            const Node z = apply_burgers(g, {c.prev.t, c.prev.x[i], c.prev.u[i]});
            pg.x[i] = z.x;
            pg.u[i] = z.u;
        }
        pg.t = apply_burgers(g, {c.prev.t, 0, 0}).t;
        const double t1 = c.prev.t + c.k;
        const Node l = apply_burgers(g, {t1, c.bc.x_left, c.bc.u_left});
        const Node rr = apply_burgers(g, {t1, c.bc.x_right, c.bc.u_right});
        const double kg = apply_burgers(g, {t1, 0, 0}).t - pg.t;
        const GridState sg = burgers_fv_step(pg, kg, {l.x, rr.x, l.u, rr.u}, c.opt).next;
        double m = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Node e = apply_burgers(g, {t1, s.x[i], s.u[i]});
            m = std::max({m, relative_deviation(sg.x[i], e.x), relative_deviation(sg.u[i], e.u)});
        }
        return m;
    };
    return run_audit<BurgersConfig, BurgersGroupElement>("burgers", "weak", opt, sample, dirs, dev);
}

}  // namespace

AuditReport invariance_audit(const std::string& scheme, const AuditOptions& opt) {
    if (scheme == "schwarzian" || scheme == "schwarzian-invariant" || scheme == "schwarzian-invariantized")
        return audit_sl2(scheme, opt);
    if (scheme == "uxx") return audit_uxx(opt);
    if (scheme == "kdv-6pt" || scheme == "kdv-10pt") return audit_kdv(scheme, opt);
    if (scheme == "naive-kdv") return audit_naive(opt);
    if (scheme == "burgers") return audit_burgers(opt);
    throw ConfigError("unknown audit scheme '" + scheme + "'");
}

// --- convergence ----------------------------------------------------------------------

std::vector<double> default_h_list(const std::string& scheme) {
    if (scheme == "naive-kdv" || scheme == "constant") return {0.4, 0.2, 0.1};
    return {0.04, 0.02, 0.01};
}

namespace {

double schwarzian_error(double h, const std::function<double(double)>& u,
                        const std::function<double(double)>& F, double x0, double x1) {
    const SchwarzianRun r = schwarzian_solve(F, x0, x1, h, u(x0), u(x0 + h), u(x0 + 2 * h));
    double e = 0.0;
    for (std::size_t j = 0; j < r.x.size(); ++j) e = std::max(e, std::abs(r.u[j] - u(r.x[j])));
    return e;
}

// u_t + uu_x + u_xxx = 0 on a periodic box [-20, 20), soliton of speed 1.
double naive_kdv_error(double h, bool constant) {
    const double L = 20.0, T = 0.1, c = 1.0;
    const int n = static_cast<int>(std::lround(2 * L / h));
    const double hh = 2 * L / n;
    auto exact = [&](double t, double x) {
        if (constant) return 0.75;
        const double s = 1 / std::cosh(std::sqrt(c) / 2 * (x - c * t));
        return 3 * c * s * s;
    };
    GridState s;
    for (int j = 0; j < n; ++j) {
        s.x.push_back(-L + j * hh);
        s.u.push_back(exact(0, s.x.back()));
    }
    const double kmax = 0.01 * hh * hh * hh;
    const long steps = std::max(1L, static_cast<long>(std::ceil(T / kmax)));
    const double k = T / static_cast<double>(steps);
    for (long m = 0; m < steps; ++m) s = naive_kdv_step(s, k, hh);
    double e = 0.0;
    for (int j = 0; j < n; ++j) e = std::max(e, std::abs(s.u[j] - exact(T, s.x[j])));
    return e;
}

}  // namespace

std::vector<ConvergenceRow> convergence_study(const std::string& scheme, const std::vector<double>& hs) {
    std::function<double(double)> err;
    if (scheme == "schwarzian") {
        err = [](double h) {
            return schwarzian_error(h, [](double x) { return x * x * x; },
                                    [](double x) { return -4 / (x * x); }, 1.0, 2.0);
        };
    } else if (scheme == "schwarzian-tan") {
        err = [](double h) {
            return schwarzian_error(h, [](double x) { return std::tan(x); }, [](double) { return 2.0; }, 0.0, 1.0);
        };
    } else if (scheme == "naive-kdv") {
        err = [](double h) { return naive_kdv_error(h, false); };
    } else if (scheme == "constant") {
        err = [](double h) { return naive_kdv_error(h, true); };
    } else {
        throw ConfigError("unknown convergence scheme '" + scheme + "'");
    }
    std::vector<ConvergenceRow> rows;
    for (double h : hs) {
        if (!(h > 0)) throw ConfigError("step sizes must be positive");
        ConvergenceRow r;
        r.h = h;
        r.error = err(h);
        r.order = rows.empty() ? std::nan("")
                               : std::log(rows.back().error / r.error) / std::log(rows.back().h / h);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace symdisc
