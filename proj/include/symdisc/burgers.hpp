#pragma once

#include <string>
#include <vector>

#include "symdisc/state.hpp"

namespace symdisc {

/// max(0, min(1, θ)).
double minmod(double theta);

/// θ_i = Δu_{I-1}/Δu_{i-1}, Δu_{i-1} = u_i - u_{i-1}, with I = i-1 when
/// upwind_sign ≥ 0 and I = i+1 otherwise. The window is u_{i-2}..u_{i+1}.
/// A vanishing denominator gives 1 when the numerator vanishes too and
/// sign(numerator)·1e15 otherwise.
double theta_ratio(double um2, double um1, double u0, double up1, double upwind_sign);

enum class Limiter { Minmod, Low, High };
enum class ThetaIndex { Current, Previous };

struct BurgersOptions {
    double nu = 0.001;
    double alpha = 0.5;  // monitor strength; 0 keeps a uniform mesh
    Limiter limiter = Limiter::Minmod;
    ThetaIndex theta_index = ThetaIndex::Current;
};

/// Position and value of both end nodes on the next row.
struct BurgersBoundary {
    double x_left = 0.0, x_right = 0.0;
    double u_left = 0.0, u_right = 0.0;
};

struct BurgersStepResult {
    GridState next;
    double min_spacing = 0.0;
    double equidistribution_residual = 0.0;
};

/// One step of the limited finite volume scheme on an equidistributed mesh.
/// Upwinding follows the sign of u_i - σ_i/k, the velocity relative to the
/// moving mesh. The update is explicit per node.
BurgersStepResult burgers_fv_step(const GridState& prev, double k, const BurgersBoundary& bc,
                                  const BurgersOptions& opt);

Limiter parse_limiter(const std::string& s);
ThetaIndex parse_theta_index(const std::string& s);

}  // namespace symdisc
