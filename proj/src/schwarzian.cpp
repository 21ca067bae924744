#include "symdisc/schwarzian.hpp"

#include <cmath>

#include "symdisc/errors.hpp"
#include "symdisc/invariants.hpp"

namespace symdisc {

double schwarzian_target_ratio(double h, double F) {
    const double den = 2 * (2 - h * h * F);
    if (std::abs(den) < kDenominatorFloor) throw SchemeSingularity("schwarzian: h^2 F = 2");
    return 1 / den;
}

SchwarzianStep schwarzian_step(double um1, double u0, double u1, double h, double F) {
    const double R = schwarzian_target_ratio(h, F);
    const double q = u0 - um1, s = u1 - um1;
    const double den = q - R * s;
    if (std::abs(den) < kDenominatorFloor * (std::abs(q) + std::abs(R * s)) || den == 0.0)
        throw SchemeSingularity("schwarzian: next value at infinity");
    SchwarzianStep out;
    out.u_next = (q * u1 - R * s * u0) / den;
    out.through_pole = (out.u_next - u1) * (u1 - u0) < 0;
    return out;
}

double schwarzian_invariantized_residual(double um1, double u0, double u1, double u2, double h,
                                         double F) {
    const double den = checked_den((u2 - u0) * (u1 - um1), "schwarzian residual");
    const double Rbar = (u2 - um1) * (u1 - u0) / den;
    const double R = (u2 - u1) * (u0 - um1) / den;
    return (1 / checked_den(Rbar - R, "schwarzian residual") - 2) / (h * h) - F;
}

double schwarzian_invariant_residual(double um1, double u0, double u1, double u2, double h,
                                     double F) {
    const double R = cross_ratio(um1, u0, u1, u2);
    return (2 - 1 / (2 * checked_den(R, "schwarzian residual"))) / (h * h) - F;
}

SchwarzianRun schwarzian_solve(const std::function<double(double)>& F, double x0, double x_end,
                               double h, double u0, double u1, double u2) {
    const int n = static_cast<int>(std::lround((x_end - x0) / h));
    SchwarzianRun run;
    run.u = {u0, u1, u2};
    for (int j = 3; j <= n; ++j) {
        const double xi = x0 + (j - 2) * h;  // centre of the window u_{j-3..j-1}
        const SchwarzianStep s = schwarzian_step(run.u[j - 3], run.u[j - 2], run.u[j - 1], h, F(xi));
        run.u.push_back(s.u_next);
        if (s.through_pole) ++run.pole_crossings;
    }
    run.x.resize(run.u.size());
    for (std::size_t j = 0; j < run.u.size(); ++j) run.x[j] = x0 + static_cast<double>(j) * h;
    return run;
}

UxxStep uxx_step(double xm1, double x0, double um1, double u0, double f) {
    if (!(x0 > xm1)) throw OutOfDomain("uxx_step: abscissae must increase");
    UxxStep s;
    s.x_next = (1 + f) * x0 - f * xm1;
    const double hm = x0 - xm1, h = s.x_next - x0;
    s.u_next = u0 + h / hm * (u0 - um1);
    return s;
}

double uxx_weak_residual(double xm1, double x0, double x1, double um1, double u0, double u1) {
    return (x0 - xm1) * (u1 - u0) - (x1 - x0) * (u0 - um1);
}

}  // namespace symdisc
