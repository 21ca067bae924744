#include "symdisc/mesh.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_interp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "symdisc/banded.hpp"
#include "symdisc/errors.hpp"

namespace symdisc {

TanglingReport detect_tangling(const std::vector<double>& x, double floor) {
    TanglingReport r;
    r.min_spacing = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double h = x[i + 1] - x[i];
        if (h < r.min_spacing) {
            r.min_spacing = h;
            r.index = i;
        }
    }
    r.tangled = r.min_spacing < floor;
    return r;
}

MeshUpdate lagrangian_update(const GridState& s, double k) {
    MeshUpdate m;
    m.x_next.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) m.x_next[i] = s.x[i] + k * s.u[i];
    const TanglingReport t = detect_tangling(m.x_next, 0.0);
    m.min_spacing = t.min_spacing;
    if (!(t.min_spacing > 0)) throw MeshTangling("lagrangian mesh lost its ordering");
    return m;
}

std::vector<double> monitor_arclength(const GridState& s, double k, double alpha) {
    const std::size_t n = s.size();
    std::vector<double> d(n, 1.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double du = (s.u[i + 1] - s.u[i]) / checked_den(s.x[i + 1] - s.x[i], "monitor spacing");
        d[i] = std::sqrt(1 + alpha * (k * du) * (k * du));
    }
    if (n >= 2) d[n - 1] = d[n - 2];
    return d;
}

MeshUpdate equidistribute(const std::vector<double>& delta, double a, double b) {
    const std::size_t n = delta.size();
    if (n < 2) throw SingularSystem("equidistribute: need two nodes");
    std::vector<double> M(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(delta[i] > 0)) throw SingularSystem("equidistribute: density must be positive");
        M[i] = (delta[i] + delta[i + 1]) / 2;
    }
    // unknowns x_1..x_{n-2}
    const std::size_t m = n - 2;
    MeshUpdate out;
    out.x_next.assign(n, a);
    out.x_next[n - 1] = b;
    if (m > 0) {
        std::vector<double> lo(m), di(m), up(m), rhs(m, 0.0);
        for (std::size_t r = 0; r < m; ++r) {
            const std::size_t i = r + 1;
            lo[r] = -M[i - 1];
            di[r] = M[i - 1] + M[i];
            up[r] = -M[i];
        }
        rhs[0] += M[0] * a;
        rhs[m - 1] += M[n - 2] * b;
        const std::vector<double> y = solve_tridiagonal(lo, di, up, rhs);
        std::copy(y.begin(), y.end(), out.x_next.begin() + 1);
    }
    const auto [mn, mx] = std::minmax_element(delta.begin(), delta.end());
    out.max_density_ratio = *mx / *mn;
    out.min_spacing = detect_tangling(out.x_next, 0.0).min_spacing;
    out.residual = equidistribution_residual(delta, out.x_next);
    if (!(out.min_spacing > 0)) throw MeshTangling("equidistribution produced a non-monotone mesh");
    return out;
}

double equidistribution_residual(const std::vector<double>& delta, const std::vector<double>& x) {
    double r = 0.0;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const double Mp = (delta[i] + delta[i + 1]) / 2, Mm = (delta[i - 1] + delta[i]) / 2;
        r = std::max(r, std::abs(Mp * (x[i + 1] - x[i]) - Mm * (x[i] - x[i - 1])));
    }
    return r;
}

double linear_interpolate(const std::vector<double>& xs, const std::vector<double>& us, double xq) {
    if (xs.empty() || xq < xs.front() || xq > xs.back())
        throw OutOfDomain("linear_interpolate: query outside data");
    auto it = std::upper_bound(xs.begin(), xs.end(), xq);
    std::size_t j = static_cast<std::size_t>(it - xs.begin());
    if (j >= xs.size()) j = xs.size() - 1;
    if (j == 0) j = 1;
    const double w = (xq - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return (1 - w) * us[j - 1] + w * us[j];
}

std::vector<double> spline_project(const std::vector<double>& xs, const std::vector<double>& us,
                                   const std::vector<double>& targets) {
    const std::size_t n = xs.size();
    if (n < 3 || us.size() != n) throw OutOfDomain("spline_project: need at least three knots");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(xs[i + 1] > xs[i])) throw MeshTangling("spline_project: knots not increasing");

    gsl_set_error_handler_off();
    std::unique_ptr<gsl_interp, decltype(&gsl_interp_free)> sp(
        gsl_interp_alloc(gsl_interp_cspline, n), &gsl_interp_free);
    if (!sp || gsl_interp_init(sp.get(), xs.data(), us.data(), n) != GSL_SUCCESS)
        throw SingularSystem("spline_project: spline setup failed");

    const double eps = 1e-12 * std::max(1.0, xs.back() - xs.front());
    std::vector<double> out(targets.size());
    for (std::size_t j = 0; j < targets.size(); ++j) {
        double q = targets[j];
        if (q < xs.front()) {
            if (xs.front() - q > eps) throw OutOfDomain("spline_project: target left of data");
            out[j] = us.front();
            continue;
        }
        if (q > xs.back()) {
            if (q - xs.back() > eps) throw OutOfDomain("spline_project: target right of data");
            out[j] = us.back();
            continue;
        }
        out[j] = gsl_interp_eval(sp.get(), xs.data(), us.data(), q, nullptr);
    }
    return out;
}

}  // namespace symdisc
