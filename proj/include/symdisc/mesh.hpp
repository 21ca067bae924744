#pragma once

#include <cstddef>
#include <vector>

#include "symdisc/state.hpp"

namespace symdisc {

struct TanglingReport {
    double min_spacing = 0.0;
    std::size_t index = 0;  // left node of the narrowest interval
    bool tangled = false;
};

TanglingReport detect_tangling(const std::vector<double>& x, double floor);

struct MeshUpdate {
    std::vector<double> x_next;
    double min_spacing = 0.0;
    double max_density_ratio = 1.0;  // max δ / min δ; 1 for Lagrangian moves
    double residual = 0.0;           // equidistribution residual, 0 when not applicable
};

/// x^{n+1}_i = x^n_i + k u^n_i. Throws MeshTangling when ordering is lost.
MeshUpdate lagrangian_update(const GridState& s, double k);

/// δ_i = sqrt(1 + α(k·Du_i)²) for i < N-1, with δ_{N-1} = δ_{N-2}.
std::vector<double> monitor_arclength(const GridState& s, double k, double alpha);

/// Solves M_i(x_{i+1}-x_i) - M_{i-1}(x_i-x_{i-1}) = 0 with M_i = (δ_i+δ_{i+1})/2,
/// x_0 = a, x_{N-1} = b.
MeshUpdate equidistribute(const std::vector<double>& delta, double a, double b);

/// Largest |M_i(x_{i+1}-x_i) - M_{i-1}(x_i-x_{i-1})| over interior nodes.
double equidistribution_residual(const std::vector<double>& delta, const std::vector<double>& x);

double linear_interpolate(const std::vector<double>& xs, const std::vector<double>& us, double xq);

/// Natural cubic spline through (xs, us) evaluated at targets. Targets within
/// 1e-12 outside the hull are clamped onto it; anything further throws
/// OutOfDomain.
std::vector<double> spline_project(const std::vector<double>& xs, const std::vector<double>& us,
                                   const std::vector<double>& targets);

}  // namespace symdisc
