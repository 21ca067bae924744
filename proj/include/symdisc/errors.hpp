#pragma once

#include <stdexcept>
#include <string>

namespace symdisc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Möbius point leaves the chart (cu + d ~ 0).
class PoleError : public Error { using Error::Error; };
// One-parameter flow left the bounded region.
class FlowDivergence : public Error { using Error::Error; };
// Could not solve E = 0 for the designated stencil coordinate.
class ProjectionFailure : public Error { using Error::Error; };
// Jet or stencil where a frame is undefined (u_x = 0 and similar).
class DegenerateJet : public Error { using Error::Error; };
// Frame normalization has no solution on this branch.
class FrameSingularity : public Error { using Error::Error; };
class DegenerateDenominator : public Error { using Error::Error; };
class SchemeSingularity : public Error { using Error::Error; };
class NewtonDivergence : public Error { using Error::Error; };
class MeshTangling : public Error { using Error::Error; };
class SingularSystem : public Error { using Error::Error; };
class OutOfDomain : public Error { using Error::Error; };
// ODE integrator blow-up.
class Divergence : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };

/// Threshold used for every denominator check in the library.
inline constexpr double kDenominatorFloor = 1e-14;

inline double checked_den(double d, const char* what) {
    if (!(d > kDenominatorFloor || d < -kDenominatorFloor))
        throw DegenerateDenominator(std::string("vanishing denominator in ") + what);
    return d;
}

}  // namespace symdisc
