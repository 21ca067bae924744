#include <cmath>

#include "doctest.h"
#include "symdisc/audit.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/exact.hpp"
#include "symdisc/groups.hpp"
#include "symdisc/mesh.hpp"

using namespace symdisc;
using doctest::Approx;

namespace {

GridState uniform(double a, double b, int n, double (*f)(double)) {
    GridState s;
    for (int i = 0; i < n; ++i) {
        s.x.push_back(a + (b - a) * i / (n - 1));
        s.u.push_back(f(s.x.back()));
    }
    return s;
}

double soliton(double x) { return 3 / std::pow(std::cosh(x / 2), 2); }

}  // namespace

TEST_CASE("lagrangian update") {
    const GridState zero = uniform(0, 1, 11, [](double) { return 0.0; });
    const MeshUpdate m0 = lagrangian_update(zero, 0.1);
    for (std::size_t i = 0; i < zero.size(); ++i) CHECK(m0.x_next[i] == zero.x[i]);

    const GridState c = uniform(0, 1, 11, [](double) { return 0.7; });
    const MeshUpdate mc = lagrangian_update(c, 0.1);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(mc.x_next[i] == Approx(c.x[i] + 0.07));

    const GridState s = uniform(-10, 10, 41, soliton);
    CHECK_THROWS_AS(lagrangian_update(s, 5.0), MeshTangling);
}

TEST_CASE("arc-length monitor") {
    const GridState s = uniform(-5, 5, 21, soliton);
    for (double d : monitor_arclength(s, 0.1, 0.0)) CHECK(d == 1.0);

    const std::vector<double> delta = monitor_arclength(s, 0.1, 10.0);
    CHECK(delta.size() == s.size());
    CHECK(delta.back() == delta[delta.size() - 2]);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const double du = (s.u[i + 1] - s.u[i]) / (s.x[i + 1] - s.x[i]);
        CHECK(delta[i] == Approx(std::sqrt(1 + 10 * 0.01 * du * du)));
    }

    Rng r(1);
    for (int t = 0; t < 50; ++t) {
        const KdVGroupElement g = random_kdv(r);
        const double k = 0.1;
        GridState gs = s;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Node z = apply_kdv(g, {s.t, s.x[i], s.u[i]});
            gs.x[i] = z.x;
            gs.u[i] = z.u;
        }
        const std::vector<double> gd = monitor_arclength(gs, g.lambda * g.lambda * g.lambda * k, 10.0);
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(relative_deviation(gd[i], delta[i]) <= 1e-10);
    }
}

TEST_CASE("equidistribution") {
    const MeshUpdate u = equidistribute(std::vector<double>(11, 1.0), -1, 1);
    for (int i = 0; i < 11; ++i) CHECK(u.x_next[i] == Approx(-1 + 0.2 * i));

    std::vector<double> d(40, 1.0);
    for (std::size_t i = 20; i < d.size(); ++i) d[i] = 9.0;
    const MeshUpdate m = equidistribute(d, 0, 1);
    const double left = m.x_next[5] - m.x_next[4], right = m.x_next[35] - m.x_next[34];
    CHECK(left / right == Approx(9.0).epsilon(1e-10));
    CHECK(equidistribution_residual(d, m.x_next) <= 1e-12);
    CHECK(m.residual <= 1e-12);
    CHECK(m.max_density_ratio == Approx(9.0));
}

TEST_CASE("equidistribution on static data is a fixed point") {
    // δ depends on the mesh only through u, which is held at the nodes
    GridState s = uniform(-3, 3, 41, [](double x) { return std::tanh(x); });
    const std::vector<double> d = monitor_arclength(s, 0.5, 10.0);
    std::vector<double> x = equidistribute(d, -3, 3).x_next;
    for (int it = 0; it < 3; ++it) {
        const std::vector<double> y = equidistribute(d, -3, 3).x_next;
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(y[i] - x[i]) <= 1e-9 * 6);
        x = y;
    }
}

TEST_CASE("linear interpolation") {
    const std::vector<double> xs{0, 0.5, 1.5, 2}, us{1, 2, 0, 3};
    CHECK(linear_interpolate(xs, us, 1.5) == Approx(0));
    CHECK(linear_interpolate(xs, us, 0.25) == Approx(1.5));
    CHECK(linear_interpolate({0, 2}, {1, 5}, 1.0) == Approx(3));
    CHECK_THROWS_AS(linear_interpolate(xs, us, 2.5), OutOfDomain);

    Rng r(2);
    for (int t = 0; t < 100; ++t) {
        const KdVGroupElement g = random_kdv(r);
        const double q = r.uniform(0, 2), tt = r.uniform(-1, 1);
        std::vector<double> gx, gu;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Node z = apply_kdv(g, {tt, xs[i], us[i]});
            gx.push_back(z.x);
            gu.push_back(z.u);
        }
        const Node gq = apply_kdv(g, {tt, q, linear_interpolate(xs, us, q)});
        CHECK(relative_deviation(linear_interpolate(gx, gu, gq.x), gq.u) <= 1e-11);
    }
}

TEST_CASE("natural spline projection") {
    auto cubic = [](double x) { return x * x * x - 2 * x + 1; };
    std::vector<double> xs, us, targets;
    for (int i = 0; i <= 40; ++i) {
        xs.push_back(-2 + 0.1 * i);
        us.push_back(cubic(xs.back()));
    }
    for (int i = 0; i < 20; ++i) targets.push_back(-0.5 + 0.05 * i + 0.013);
    const std::vector<double> v = spline_project(xs, us, targets);
    for (std::size_t i = 0; i < targets.size(); ++i) CHECK(std::abs(v[i] - cubic(targets[i])) <= 1e-10);

    // boundary targets within 1e-12 are clamped, further out is an error
    CHECK(spline_project(xs, us, {-2 - 1e-14})[0] == Approx(us.front()));
    CHECK_THROWS_AS(spline_project(xs, us, {2.5}), OutOfDomain);
    CHECK_THROWS_AS(spline_project({0, 1, 1, 2}, {0, 1, 2, 3}, {0.5}), MeshTangling);

    Rng r(3);
    for (int t = 0; t < 50; ++t) {
        const KdVGroupElement g = random_kdv(r);
        const double tt = r.uniform(-1, 1);
        std::vector<double> gx, gu, gt;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const Node z = apply_kdv(g, {tt, xs[i], us[i]});
            gx.push_back(z.x);
            gu.push_back(z.u);
        }
        for (double q : targets) gt.push_back(apply_kdv(g, {tt, q, 0}).x);
        const std::vector<double> gv = spline_project(gx, gu, gt);
        for (std::size_t i = 0; i < targets.size(); ++i)
            CHECK(relative_deviation(gv[i], apply_kdv(g, {tt, targets[i], v[i]}).u) <= 1e-10);
    }
}

TEST_CASE("spline projection of a soliton converges at fourth order") {
    double prev = 0.0;
    for (int n : {80, 160, 320}) {
        std::vector<double> xs, us, targets;
        const double h = 40.0 / n;
        for (int i = 0; i <= n; ++i) {
            // drifted mesh
            const double x = -20 + h * i + (i > 0 && i < n ? 0.3 * h * std::sin(i) : 0.0);
            xs.push_back(x);
            us.push_back(soliton(x));
        }
        // a fixed fraction into each interval so the error constant does not wander
        for (int i = 0; i < n; ++i) targets.push_back(xs[i] + 0.37 * (xs[i + 1] - xs[i]));
        const std::vector<double> v = spline_project(xs, us, targets);
        double err = 0.0;
        for (std::size_t i = 0; i < targets.size(); ++i) err = std::max(err, std::abs(v[i] - soliton(targets[i])));
        if (prev > 0) CHECK(std::log2(prev / err) > 3.5);
        prev = err;
    }
}

TEST_CASE("tangling detection") {
    const GridState s = uniform(0, 1, 11, [](double) { return 0.0; });
    const TanglingReport ok = detect_tangling(s.x, 1e-3);
    CHECK_FALSE(ok.tangled);
    CHECK(ok.min_spacing == Approx(0.1));
    const TanglingReport bad = detect_tangling({0, 0.2, 0.2, 0.5}, 1e-3);
    CHECK(bad.tangled);
    CHECK(bad.index == 1);
}
