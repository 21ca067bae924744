#include "symdisc/kdv.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symdisc/banded.hpp"
#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

double slope(const std::vector<double>& x, const std::vector<double>& u, std::size_t i) {
    return (u[i + 1] - u[i]) / checked_den(x[i + 1] - x[i], "kdv spacing");
}

void check_pair(const GridState& prev, const GridState& next, double k) {
    validate(prev, 5);
    validate(next, 5);
    if (prev.size() != next.size()) throw OutOfDomain("kdv: rows differ in length");
    checked_den(k, "kdv time step");
}

// Coordinate residual at one interior node.
double residual_at(const GridState& p, const GridState& q, double k, std::size_t i, bool ten) {
    const double sigma = q.x[i] - p.x[i];
    const double adv = p.u[i] - sigma / k;
    double slopes = (slope(p.x, p.u, i) + slope(p.x, p.u, i - 1)) / 2;
    double d3 = (kdv_d3(p.x, p.u, i) + kdv_d3(p.x, p.u, i - 1)) / 2;
    if (ten) {
        slopes = (slopes + (slope(q.x, q.u, i) + slope(q.x, q.u, i - 1)) / 2) / 2;
        d3 = (d3 + (kdv_d3(q.x, q.u, i) + kdv_d3(q.x, q.u, i - 1)) / 2) / 2;
    }
    return (q.u[i] - p.u[i]) / k + adv * slopes + d3;
}

std::vector<double> residuals(const GridState& prev, const GridState& next, double k, bool ten) {
    check_pair(prev, next, k);
    const std::size_t n = prev.size();
    std::vector<double> r;
    r.reserve(n - 4);
    for (std::size_t i = 2; i + 2 < n; ++i) r.push_back(residual_at(prev, next, k, i, ten));
    return r;
}

}  // namespace

double kdv_d3(const std::vector<double>& x, const std::vector<double>& u, std::size_t i) {
    const double hm = x[i] - x[i - 1], h = x[i + 1] - x[i], hp = x[i + 2] - x[i + 1];
    const double dm = slope(x, u, i - 1), d0 = slope(x, u, i), dp = slope(x, u, i + 1);
    return 2 / checked_den(h, "kdv spacing") *
           ((dp - d0) / checked_den(hp + h, "kdv spacing") - (d0 - dm) / checked_den(h + hm, "kdv spacing"));
}

std::vector<double> kdv_residual_6pt(const GridState& prev, const GridState& next, double k) {
    return residuals(prev, next, k, false);
}

std::vector<double> kdv_residual_10pt(const GridState& prev, const GridState& next, double k) {
    return residuals(prev, next, k, true);
}

double kdv_scheme_invariant_6pt(const Stencil& z) {
    const KdVInvariants q = kdv_invariants(z);
    const double H = q.H(0, 0);
    return q.T() - q.J() * q.L() * (q.K(0, 0) + q.K(0, -1)) / 2 + kdv_Q(z, 0, 0) +
           kdv_Q(z, 0, -1) / (H * H);
}

double kdv_scheme_invariant_10pt(const Stencil& z) {
    const KdVInvariants q = kdv_invariants(z);
    const double H0 = q.H(0, 0), H1 = q.H(1, 0), I = q.I();
    const double slopes = (q.K(0, 0) + q.K(0, -1) + q.K(1, 0) + q.K(1, -1)) / 4;
    const double upper = (kdv_Q(z, 1, 0) + kdv_Q(z, 1, -1) / (H1 * H1)) / (I * I);
    const double lower = kdv_Q(z, 0, 0) + kdv_Q(z, 0, -1) / (H0 * H0);
    return q.T() - q.J() * q.L() * slopes + (upper + lower) / 2;
}

Stencil kdv_stencil_at(const GridState& prev, const GridState& next, std::size_t i) {
    if (i < 2 || i + 2 >= prev.size()) throw OutOfDomain("kdv stencil: node too close to boundary");
    KdVRows r;
    r.t0 = prev.t;
    r.k = next.t - prev.t;
    for (int j = -2; j <= 2; ++j) {
        const std::size_t m = i + j;
        r.x0[j + 2] = prev.x[m];
        r.u0[j + 2] = prev.u[m];
        r.x1[j + 2] = next.x[m];
        r.u1[j + 2] = next.u[m];
    }
    Stencil z = make_kdv_stencil(r);
    z.i = static_cast<int>(i);
    return z;
}

KdVStepResult kdv_step(const GridState& prev, double k, const KdVStepOptions& opt) {
    validate(prev, 5);
    const std::size_t n = prev.size();
    KdVStepResult out;

    MeshUpdate mesh;
    if (opt.strategy == MeshStrategy::Adaptive) {
        mesh = equidistribute(monitor_arclength(prev, k, opt.alpha), prev.x.front(), prev.x.back());
        out.equidistribution_residual = mesh.residual;
    } else {
        mesh = lagrangian_update(prev, k);
        if (opt.strategy == MeshStrategy::Projection) {
            // the end nodes stay on the domain boundary so the fixed grid
            // remains inside the hull of the moved one
            mesh.x_next.front() = prev.x.front();
            mesh.x_next.back() = prev.x.back();
            mesh.min_spacing = detect_tangling(mesh.x_next, 0.0).min_spacing;
        }
    }
    out.min_spacing = mesh.min_spacing;
    if (mesh.min_spacing < opt.tangling_floor)
        throw MeshTangling("kdv: mesh spacing " + std::to_string(mesh.min_spacing) + " below floor");

    GridState next;
    next.t = prev.t + k;
    next.x = mesh.x_next;
    const bool ten = opt.scheme == KdVScheme::TenPoint;

    auto F = [&](const std::vector<double>& u1) {
        GridState q{next.t, next.x, u1};
        std::vector<double> r(n);
        for (std::size_t i : {std::size_t{0}, std::size_t{1}, n - 2, n - 1}) r[i] = u1[i] - prev.u[i];
        for (std::size_t i = 2; i + 2 < n; ++i) r[i] = residual_at(prev, q, k, i, ten);
        return r;
    };

    if (ten) {
        const NewtonResult nr = newton_banded(F, prev.u, 2, opt.newton);
        next.u = nr.y;
        out.newton_iters = nr.iterations;
        out.residual_inf = nr.residual_inf;
    } else {
        // explicit: the residual is (u^{n+1}_i - u^n_i)/k plus row-n terms
        next.u = prev.u;
        const std::vector<double> r0 = F(next.u);
        for (std::size_t i = 2; i + 2 < n; ++i) next.u[i] -= k * r0[i];
        const std::vector<double> r1 = F(next.u);
        for (double v : r1) out.residual_inf = std::max(out.residual_inf, std::abs(v));
    }

    if (opt.strategy == MeshStrategy::Projection) {
        next.u = spline_project(next.x, next.u, prev.x);
        next.x = prev.x;
    }
    out.next = std::move(next);
    return out;
}

std::vector<double> naive_kdv_residual(const GridState& prev, const GridState& next, double k,
                                       double h) {
    const std::size_t n = prev.size();
    if (n < 5 || next.size() != n) throw OutOfDomain("naive kdv: need matching rows of 5+ nodes");
    auto U = [&](std::ptrdiff_t j) {
        const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n);
        return prev.u[static_cast<std::size_t>(((j % m) + m) % m)];
    };
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = static_cast<std::ptrdiff_t>(i);
        r[i] = (next.u[i] - prev.u[i]) / k + prev.u[i] * (U(j + 1) - U(j - 1)) / (2 * h) +
               (U(j + 2) - 2 * U(j + 1) + 2 * U(j - 1) - U(j - 2)) / (2 * h * h * h);
    }
    return r;
}

GridState naive_kdv_step(const GridState& prev, double k, double h) {
    GridState next = prev;
    next.t = prev.t + k;
    const std::vector<double> r = naive_kdv_residual(prev, prev, k, h);
    for (std::size_t i = 0; i < prev.size(); ++i) next.u[i] = prev.u[i] - k * r[i];
    return next;
}

}  // namespace symdisc
