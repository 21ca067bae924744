#pragma once

#include <functional>
#include <vector>

#include "symdisc/state.hpp"

namespace symdisc {

/// Thomas elimination for lower[i]·y[i-1] + diag[i]·y[i] + upper[i]·y[i+1] = rhs[i].
/// lower[0] and upper[n-1] are ignored. Throws SingularSystem on a zero pivot.
std::vector<double> solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                                      std::vector<double> upper, std::vector<double> rhs);

using ResidualFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct NewtonResult {
    std::vector<double> y;
    int iterations = 0;
    double residual_inf = 0.0;
};

/// Damped Newton for F(y) = 0 where F_i depends only on y_{i-bw..i+bw}.
/// The Jacobian is built by finite differences with 2·bw+1 column colours
/// and factored as a sparse LU. Throws NewtonDivergence when the tolerance
/// is not met within max_iter.
NewtonResult newton_banded(const ResidualFn& F, std::vector<double> y0, int bandwidth,
                           const NewtonConfig& cfg);

}  // namespace symdisc
