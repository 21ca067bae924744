#pragma once

#include <functional>
#include <vector>

namespace symdisc {

/// Target cross-ratio 1/(2(2 - h²F)).
double schwarzian_target_ratio(double h, double F);

struct SchwarzianStep {
    double u_next = 0.0;
    bool through_pole = false;  // (u_{i+2}-u_{i+1})(u_{i+1}-u_i) < 0
};

/// Solves cross_ratio(u_{i-1}, u_i, u_{i+1}, u_{i+2}) = R* for u_{i+2}.
/// Throws SchemeSingularity when h²F = 2 or the linear-fractional solve
/// degenerates.
SchwarzianStep schwarzian_step(double um1, double u0, double u1, double h, double F);

/// (1/h²)[1/(R̄ - R) - 2] - F with
///   R̄ = (u_{i+2}-u_{i-1})(u_{i+1}-u_i) / ((u_{i+2}-u_i)(u_{i+1}-u_{i-1})).
double schwarzian_invariantized_residual(double um1, double u0, double u1, double u2, double h,
                                         double F);

/// (1/h²)[2 - 1/(2R)] - F.
double schwarzian_invariant_residual(double um1, double u0, double u1, double u2, double h,
                                     double F);

struct SchwarzianRun {
    std::vector<double> x, u;
    int pole_crossings = 0;
};

/// Uniform grid x0 + j h up to x_end, seeded with three values.
SchwarzianRun schwarzian_solve(const std::function<double(double)>& F, double x0, double x_end,
                               double h, double u0, double u1, double u2);

// ---------------------------------------------------------------------------
// u_xx = 0

struct UxxStep {
    double x_next = 0.0, u_next = 0.0;
};

/// Mesh x_{i+1} = (1+f)x_i - f x_{i-1}; value from W = 0.
UxxStep uxx_step(double xm1, double x0, double um1, double u0, double f);

/// W = h_{i-1}(u_{i+1}-u_i) - h_i(u_i-u_{i-1}).
double uxx_weak_residual(double xm1, double x0, double x1, double um1, double u0, double u1);

}  // namespace symdisc
