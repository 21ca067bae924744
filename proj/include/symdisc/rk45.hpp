#pragma once

#include <functional>
#include <string>
#include <vector>

namespace symdisc {

using OdeRhs = std::function<void(const std::vector<double>& y, std::vector<double>& dydx, double x)>;

struct RkResult {
    std::vector<double> xs;
    std::vector<std::vector<double>> ys;
    int accepted = 0;
    int rejected = 0;
    bool diverged = false;
    double x_stop = 0.0;  // last accepted abscissa
    std::string reason;
};

/// Dormand–Prince 4(5) with proportional step control. Integration stops
/// and sets `diverged` when |y| exceeds 1e12 or the step size collapses.
RkResult rk_adaptive_solve(const OdeRhs& f, std::vector<double> y0, double x0, double x1,
                           double rel_tol);

/// First-order form of the Schwarzian equation S(u) = F(x), y = (u, u', u''):
///   u''' = F u' + (3/2) u''²/u'.
OdeRhs schwarzian_rhs(std::function<double(double)> F);

}  // namespace symdisc
