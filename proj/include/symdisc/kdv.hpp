#pragma once

#include <vector>

#include "symdisc/invariants.hpp"
#include "symdisc/mesh.hpp"
#include "symdisc/state.hpp"

namespace symdisc {

/// D³u_i on a nonuniform row; needs nodes i-1..i+2.
double kdv_d3(const std::vector<double>& x, const std::vector<double>& u, std::size_t i);

/// Residuals at interior nodes i = 2..N-3 (entry i-2) of
///   (u^{n+1}_i-u^n_i)/k + (u^n_i - σ_i/k)(Du^n_i+Du^n_{i-1})/2 + (D³u^n_i+D³u^n_{i-1})/2.
std::vector<double> kdv_residual_6pt(const GridState& prev, const GridState& next, double k);

/// Same with slopes and D³u averaged over both rows.
std::vector<double> kdv_residual_10pt(const GridState& prev, const GridState& next, double k);

/// Invariant forms built from the 18 invariants on a single stencil. Each
/// equals k·(h^n_i)² times the corresponding coordinate residual.
double kdv_scheme_invariant_6pt(const Stencil& z);
double kdv_scheme_invariant_10pt(const Stencil& z);

/// Stencil centred at node i (columns i-2..i+2) of a pair of rows.
Stencil kdv_stencil_at(const GridState& prev, const GridState& next, std::size_t i);

enum class MeshStrategy { Lagrangian, Adaptive, Projection };
enum class KdVScheme { SixPoint, TenPoint };

struct KdVStepOptions {
    MeshStrategy strategy = MeshStrategy::Lagrangian;
    KdVScheme scheme = KdVScheme::TenPoint;
    double alpha = 10.0;          // monitor strength, adaptive only
    double tangling_floor = 0.0;  // minimum admissible spacing
    NewtonConfig newton;
};

struct KdVStepResult {
    GridState next;
    int newton_iters = 0;
    double residual_inf = 0.0;
    double equidistribution_residual = 0.0;
    double min_spacing = 0.0;  // of the moved mesh, before any projection
};

/// One step of the invariant scheme. The two nodes at each end keep their
/// values. Throws MeshTangling when the moved mesh has spacing below the
/// floor, NewtonDivergence when the implicit solve fails.
KdVStepResult kdv_step(const GridState& prev, double k, const KdVStepOptions& opt);

/// Naive explicit scheme on a uniform periodic mesh.
std::vector<double> naive_kdv_residual(const GridState& prev, const GridState& next, double k,
                                       double h);
GridState naive_kdv_step(const GridState& prev, double k, double h);

}  // namespace symdisc
