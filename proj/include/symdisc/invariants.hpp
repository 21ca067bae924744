#pragma once

#include <array>

#include "symdisc/groups.hpp"

namespace symdisc {

// ---------------------------------------------------------------------------
// SL(2,R)

/// (u_i-u_{i-1})(u_{i+2}-u_{i+1}) / ((u_{i+1}-u_{i-1})(u_{i+2}-u_i))
double cross_ratio(double um1, double u0, double u1, double u2);

struct SL2Chain {
    double I_im1, I_i, I_ip1;  // consecutive differences
    double J_i, J_ip1;         // J_i = I_{i-1}/I_i, J_{i+1} = I_i/I_{i+1}
    double R;                  // J_i / ((1+J_i)(1+J_{i+1}))
};

SL2Chain sl2_invariant_chain(double um1, double u0, double u1, double u2);

// ---------------------------------------------------------------------------
// KdV: two time rows, columns i-2..i+2

struct KdVRows {
    double t0 = 0.0, k = 1.0;
    std::array<double, 5> x0{}, u0{}, x1{}, u1{};  // index j+2 for offset j
};

Stencil make_kdv_stencil(const KdVRows& r);
KdVRows kdv_rows(const Stencil& z);

/// The 18 invariants in a fixed order:
///   0-2   H^n_{i-1}, H^n_i, H^n_{i+1}
///   3-5   H^{n+1}_{i-1}, H^{n+1}_i, H^{n+1}_{i+1}
///   6-9   I, J, L, T
///   10-13 K^n_{i-2}, K^n_{i-1}, K^n_i, K^n_{i+1}
///   14-17 K^{n+1}_{i-2}, ..., K^{n+1}_{i+1}
/// H_{i+j} = h_{i+j-1}/h_{i+j}, I = h^{n+1}_i/h^n_i, J = (h^n_i)³/k,
/// L = (σ_i - k u^n_i)/h^n_i, T = (u^{n+1}_i - u^n_i)(h^n_i)², K = k·Du.
struct KdVInvariants {
    std::array<double, 18> v{};

    double H(int row, int j) const { return v[3 * row + (j + 1)]; }
    double I() const { return v[6]; }
    double J() const { return v[7]; }
    double L() const { return v[8]; }
    double T() const { return v[9]; }
    double K(int row, int j) const { return v[10 + 4 * row + (j + 2)]; }
};

KdVInvariants kdv_invariants(const Stencil& z);
double kdv_invariant(const Stencil& z, int index);

/// Q on the given row, centred at column i+shift (shift 0 or -1):
///   Q_c = H_{c+1}(K_{c+1}-K_c)/(1+H_{c+1}) - (K_c-K_{c-1})/(1+H_c).
/// It equals k·h_c²·D³u_c/2.
double kdv_Q(const Stencil& z, int row, int shift);

// ---------------------------------------------------------------------------
// Burgers: two time rows, columns i-1..i+1

struct BurgersRows {
    double t0 = 0.0, k = 1.0;
    std::array<double, 3> x0{}, u0{}, x1{}, u1{};  // index j+1 for offset j
};

Stencil make_burgers_stencil(const BurgersRows& r);

/// I1..I9 stored at index 0..8.
std::array<double, 9> burgers_invariants(const Stencil& z);
double burgers_invariant(const Stencil& z, int index);

}  // namespace symdisc
