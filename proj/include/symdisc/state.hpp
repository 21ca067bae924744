#pragma once

#include <vector>

namespace symdisc {

/// One time level: t, strictly increasing abscissae x, values u.
struct GridState {
    double t = 0.0;
    std::vector<double> x, u;

    std::size_t size() const { return x.size(); }
};

struct NewtonConfig {
    double tol = 1e-10;  // residual inf-norm
    int max_iter = 50;
    double jacobian_fd_step = 1e-7;
};

/// Checks sizes match and x is strictly increasing; throws OutOfDomain.
void validate(const GridState& s, std::size_t min_nodes);

double total_variation(const std::vector<double>& u);

}  // namespace symdisc
