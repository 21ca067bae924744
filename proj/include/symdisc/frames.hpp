#pragma once

#include "symdisc/groups.hpp"

namespace symdisc {

// ---------------------------------------------------------------------------
// SL(2,R)

/// Frame onto the cross-section u = 0, u_x = ±1, u_xx = 0.
SL2Element sl2_differential_frame(double u, double ux, double uxx);

struct SL2Jet {
    double u = 0.0, ux = 0.0, uxx = 0.0;
};

/// Second prolongation of the Möbius action.
SL2Jet apply_sl2_jet(const SL2Element& g, const SL2Jet& j);

struct SL2DiscreteFrameInput {
    double um1 = 0.0, u0 = 0.0, u1 = 0.0, u2 = 0.0;
    double h = 1.0;
};

/// ε_i = sign((u_{i+1}-u_i)(u_i-u_{i-1})(u_{i+1}-u_{i-1})), sign(0) = +1.
double sl2_frame_sign(const SL2DiscreteFrameInput& in);

/// Maps (u_{i-1}, u_i, u_{i+1}) to (-hε, 0, hε). Throws FrameSingularity when
/// D²u_i = 0, where the c-parametrized formulas break down.
SL2Element sl2_discrete_frame(const SL2DiscreteFrameInput& in);

/// Same frame, but continuous through D²u_i = 0 (c = 0, a = |Du_i|^{-1/2}).
SL2Element sl2_discrete_frame_total(const SL2DiscreteFrameInput& in);

// ---------------------------------------------------------------------------
// KdV

struct KdVFrameInput {
    double t = 0.0, x = 0.0, u = 0.0;
    double dxu = 1.0;  // (Du_i + Du_{i-1})/2
};

/// Normalizes t, x, u to 0 and the averaged slope to 1.
KdVGroupElement kdv_discrete_frame(const KdVFrameInput& in);

/// Frame input read off row 0 of a KdV stencil.
KdVFrameInput kdv_frame_input(const Stencil& z);

// ---------------------------------------------------------------------------
// Burgers

struct BurgersFrameInput {
    double t = 0.0, x = 0.0, u = 0.0, u_next = 0.0;
    double dxu = 0.0, dtu = 0.0, k = 1.0;
};

struct BurgersFrame {
    BurgersGroupElement g;
    double eps5 = 0.0;  // inversion parameter; recorded, never applied
};

/// (1 + kΔxu)(Δtu + u^{n+1}Δxu), the quantity normalized to 1.
double burgers_frame_argument(const BurgersFrameInput& in);

BurgersFrame burgers_discrete_frame(const BurgersFrameInput& in);

/// Reads the frame input off a two-row, three-column Burgers stencil.
BurgersFrameInput burgers_frame_input(const Stencil& z);

// ---------------------------------------------------------------------------
// Invariantization

enum class FrameFamily { SL2Discrete, KdV, Burgers };

/// ρ(z)·z. For SL2Discrete the stencil holds row 0, columns -1..2, on a
/// uniform mesh; KdV and Burgers use the layouts of invariants.hpp.
Stencil normalize(FrameFamily fam, const Stencil& z);

/// ι(F)(z) = F(ρ(z)·z).
double invariantize(FrameFamily fam, const StencilFunction& F, const Stencil& z);

}  // namespace symdisc
