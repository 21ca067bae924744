#include "symdisc/rk45.hpp"

#include <boost/numeric/odeint.hpp>
#include <algorithm>
#include <cmath>

namespace symdisc {

namespace odeint = boost::numeric::odeint;

RkResult rk_adaptive_solve(const OdeRhs& f, std::vector<double> y0, double x0, double x1,
                           double rel_tol) {
    using State = std::vector<double>;
    auto stepper = odeint::make_controlled(rel_tol * 1e-2, rel_tol, odeint::runge_kutta_dopri5<State>());
    auto sys = [&](const State& y, State& dy, double x) { f(y, dy, x); };

    RkResult out;
    State y = std::move(y0);
    double x = x0;
    double dx = std::min(1e-3, (x1 - x0) / 10);
    out.xs.push_back(x);
    out.ys.push_back(y);
    while (x < x1) {
        dx = std::min(dx, x1 - x);
        if (dx < 1e-15 * std::max(1.0, std::abs(x))) {
            out.diverged = true;
            out.reason = "step size collapsed";
            break;
        }
        if (stepper.try_step(sys, y, x, dx) == odeint::fail) {
            ++out.rejected;
            continue;
        }
        ++out.accepted;
        out.xs.push_back(x);
        out.ys.push_back(y);
        const bool finite = std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
        const double big = finite ? std::abs(*std::max_element(y.begin(), y.end(), [](double a, double b) {
                                        return std::abs(a) < std::abs(b);
                                    }))
                                  : INFINITY;
        if (big > 1e12) {
            out.diverged = true;
            out.reason = "solution exceeded 1e12";
            break;
        }
    }
    out.x_stop = x;
    return out;
}

OdeRhs schwarzian_rhs(std::function<double(double)> F) {
    return [F = std::move(F)](const std::vector<double>& y, std::vector<double>& dy, double x) {
        dy[0] = y[1];
        dy[1] = y[2];
        dy[2] = F(x) * y[1] + 1.5 * y[2] * y[2] / y[1];
    };
}

}  // namespace symdisc
