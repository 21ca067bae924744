#include "symdisc/burgers.hpp"

#include <algorithm>
#include <cmath>

#include "symdisc/errors.hpp"
#include "symdisc/mesh.hpp"

namespace symdisc {

double minmod(double theta) { return std::max(0.0, std::min(1.0, theta)); }

double theta_ratio(double um2, double um1, double u0, double up1, double upwind_sign) {
    const double num = upwind_sign >= 0 ? um1 - um2 : up1 - u0;
    const double den = u0 - um1;
    if (den == 0.0) {
        if (num == 0.0) return 1.0;
        return num > 0 ? 1e15 : -1e15;
    }
    return num / den;
}

Limiter parse_limiter(const std::string& s) {
    if (s == "minmod") return Limiter::Minmod;
    if (s == "low") return Limiter::Low;
    if (s == "high") return Limiter::High;
    throw ConfigError("unknown limiter '" + s + "' (minmod, low, high)");
}

ThetaIndex parse_theta_index(const std::string& s) {
    if (s == "current") return ThetaIndex::Current;
    if (s == "previous") return ThetaIndex::Previous;
    throw ConfigError("unknown theta_index '" + s + "' (current, previous)");
}

BurgersStepResult burgers_fv_step(const GridState& prev, double k, const BurgersBoundary& bc,
                                  const BurgersOptions& opt) {
    validate(prev, 3);
    checked_den(k, "burgers time step");
    const std::size_t n = prev.size();
    const auto N = static_cast<std::ptrdiff_t>(n);

    BurgersStepResult out;
    const MeshUpdate mesh = equidistribute(monitor_arclength(prev, k, opt.alpha), bc.x_left, bc.x_right);
    out.min_spacing = mesh.min_spacing;
    out.equidistribution_residual = mesh.residual;
    const std::vector<double>& x1 = mesh.x_next;
    const std::vector<double>& x0 = prev.x;
    const std::vector<double>& u = prev.u;

    std::vector<double> sigma(n), du(n - 1), c(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = x1[i] - x0[i];
    for (std::size_t i = 0; i + 1 < n; ++i) du[i] = (u[i + 1] - u[i]) / (x0[i + 1] - x0[i]);
    for (std::size_t i = 0; i < n; ++i) c[i] = u[i] - sigma[i] / k;

    // ghosts by constant extrapolation: values repeat, slopes vanish
    auto U = [&](std::ptrdiff_t j) { return u[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j, 0, N - 1))]; };
    auto Du = [&](std::ptrdiff_t j) { return (j < 0 || j >= N - 1) ? 0.0 : du[static_cast<std::size_t>(j)]; };
    auto C = [&](std::ptrdiff_t j) { return c[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(j, 0, N - 1))]; };
    auto theta = [&](std::ptrdiff_t j) { return theta_ratio(U(j - 2), U(j - 1), U(j), U(j + 1), C(j)); };
    auto h0 = [&](std::ptrdiff_t j) { return x0[j + 1] - x0[j]; };
    auto h1 = [&](std::ptrdiff_t j) { return x1[j + 1] - x1[j]; };

    GridState next;
    next.t = prev.t + k;
    next.x = x1;
    next.u.resize(n);
    next.u.front() = bc.u_left;
    next.u.back() = bc.u_right;
    for (std::ptrdiff_t i = 1; i + 1 < N; ++i) {
        double phi = 1.0;
        switch (opt.limiter) {
            case Limiter::Low: phi = 0.0; break;
            case Limiter::High: phi = 1.0; break;
            case Limiter::Minmod:
                phi = minmod(theta(opt.theta_index == ThetaIndex::Current ? i : i - 1));
                break;
        }
        const double hi1 = h1(i) + h1(i - 1), hi0 = h0(i) + h0(i - 1);
        // 2ν: the centred flux difference spans two cells
        const double fh = 0.5 * (U(i + 1) * U(i + 1) - U(i - 1) * U(i - 1)) -
                          2 * opt.nu * (Du(i) - Du(i - 1)) -
                          (sigma[i + 1] * U(i + 1) - sigma[i - 1] * U(i - 1)) / k;
        double lo1, lo0, fl;
        if (C(i) >= 0) {
            lo1 = h1(i - 1);
            lo0 = h0(i - 1);
            fl = 0.5 * (U(i) * U(i) - U(i - 1) * U(i - 1)) - opt.nu * (Du(i - 1) - Du(i - 2)) -
                 (sigma[i] * U(i) - sigma[i - 1] * U(i - 1)) / k;
        } else {
            lo1 = h1(i);
            lo0 = h0(i);
            fl = 0.5 * (U(i + 1) * U(i + 1) - U(i) * U(i)) - opt.nu * (Du(i + 1) - Du(i)) -
                 (sigma[i + 1] * U(i + 1) - sigma[i] * U(i)) / k;
        }
        const double A1 = lo1 - phi * (lo1 - hi1);
        const double A0 = lo0 - phi * (lo0 - hi0);
        const double F = fl - phi * (fl - fh);
        next.u[i] = (A0 * U(i) - k * F) / checked_den(A1, "burgers cell width");
    }
    out.next = std::move(next);
    return out;
}

}  // namespace symdisc
