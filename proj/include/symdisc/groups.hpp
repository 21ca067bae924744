#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symdisc/rng.hpp"

namespace symdisc {

struct Node {
    double t = 0.0, x = 0.0, u = 0.0;
};

// ---------------------------------------------------------------------------
// Concrete group families

/// Möbius map u -> (au+b)/(cu+d) with ad-bc = 1.
struct SL2Element {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    /// Rescales by 1/sqrt(|ad-bc|); a negative determinant is rejected.
    static SL2Element make(double a, double b, double c, double d);
    static SL2Element identity() { return {}; }
};

double apply_sl2(const SL2Element& g, double u);
SL2Element compose(const SL2Element& g, const SL2Element& h);  // g∘h
SL2Element inverse(const SL2Element& g);
// Frames are determined up to the centre {I, -I}.
double distance_mod_sign(const SL2Element& g, const SL2Element& h);

/// KdV symmetry group, scale-then-boost form:
///   T = λ³t + b,  X = λx + λ³vt + a,  U = u/λ² + v.
/// The boost enters X with the factor λ³ so that the family is closed
/// under composition.
struct KdVGroupElement {
    double lambda = 1.0, v = 0.0, a = 0.0, b = 0.0;
};

Node apply_kdv(const KdVGroupElement& g, const Node& z);
KdVGroupElement compose(const KdVGroupElement& g, const KdVGroupElement& h);
KdVGroupElement inverse(const KdVGroupElement& g);

/// Four-parameter Burgers subgroup. With s = e^{ε4}:
///   T = s²(t+ε2),  X = s(x + ε1 + ε3(t+ε2)),  U = (u+ε3)/s.
/// Shifts act first, then the boost, then the scaling.
struct BurgersGroupElement {
    double eps1 = 0.0, eps2 = 0.0, eps3 = 0.0, eps4 = 0.0;
};

Node apply_burgers(const BurgersGroupElement& g, const Node& z);
BurgersGroupElement compose(const BurgersGroupElement& g, const BurgersGroupElement& h);
BurgersGroupElement inverse(const BurgersGroupElement& g);

/// Five-parameter symmetry group of u_xx = 0 used by the weakly invariant
/// scheme: X = λx + a, U = αu + βx + b (λ, α nonzero).
struct AffineElement {
    double lambda = 1.0, a = 0.0, alpha = 1.0, beta = 0.0, b = 0.0;
};

Node apply_affine(const AffineElement& g, const Node& z);

// Random elements with parameters in modest ranges; used by audits and tests.
SL2Element random_sl2(Rng& rng);
KdVGroupElement random_kdv(Rng& rng);
BurgersGroupElement random_burgers(Rng& rng);
AffineElement random_affine(Rng& rng);

// ---------------------------------------------------------------------------
// Vector fields and stencils

/// v = tau ∂t + xi ∂x + phi ∂u, optionally multiplied by an index weight
/// w(n, i) at lattice node (n, i).
struct VectorFieldSpec {
    std::string name;
    std::function<double(double t, double x, double u)> tau, xi, phi;
    std::function<double(int n, int i)> weight;  // empty means 1

    double weight_at(int n, int i) const { return weight ? weight(n, i) : 1.0; }
};

struct StencilNode {
    int l = 0;  // time offset
    int j = 0;  // space offset
    Node z;
};

struct Stencil {
    int n = 0, i = 0;  // reference lattice index
    std::vector<StencilNode> nodes;

    double norm_inf() const;
    // Node at offset (l, j); throws OutOfDomain when absent.
    const Node& at(int l, int j) const;
    Node& at(int l, int j);
    void push(int l, int j, Node z) { nodes.push_back({l, j, z}); }
};

using StencilFunction = std::function<double(const Stencil&)>;

namespace fields {
VectorFieldSpec d_t();
VectorFieldSpec d_x();
VectorFieldSpec d_u();
VectorFieldSpec u_d_u();
VectorFieldSpec uu_d_u();
VectorFieldSpec x_d_x();
VectorFieldSpec x_d_u();
VectorFieldSpec galilean();  // t∂x + ∂u

std::vector<VectorFieldSpec> sl2();      // ∂u, u∂u, u²∂u
std::vector<VectorFieldSpec> kdv();      // ∂x, ∂t, t∂x+∂u, x∂x+3t∂t-2u∂u
std::vector<VectorFieldSpec> burgers();  // ∂x, ∂t, t∂x+∂u, x∂x+2t∂t-u∂u
std::vector<VectorFieldSpec> affine5();  // ∂x, ∂u, x∂x, x∂u, u∂u
// Lattice symmetries of the discrete potential KdV equation.
std::vector<VectorFieldSpec> dpkdv();    // (-1)^{i+n}u∂u, (-1)^{i+n}∂u, ∂u
}  // namespace fields

/// Integrates dZ/dε = ζ(Z) from z over [0, epsilon] with classical RK4 and
/// step-doubling error control.
Node flow(const VectorFieldSpec& field, const Node& z, double epsilon);

/// Moves every stencil node along the flow by epsilon·w(n+l, i+j).
Stencil flow_stencil(const VectorFieldSpec& field, const Stencil& z, double epsilon);

/// d/dε F(exp(ε v)·z) at ε = 0, central difference.
double prolonged_directional_derivative(const StencilFunction& F,
                                        const VectorFieldSpec& field,
                                        const Stencil& z);

struct SymmetryReport {
    double max_abs = 0.0;
    int samples = 0;
    int resampled = 0;  // draws where E = 0 could not be solved
    bool passed = false;
};

struct DesignatedCoordinate {
    int node = 0;  // index into Stencil::nodes; its u-value is solved for
};

/// Samples stencils, projects each onto E = 0 by a 1-D Newton solve for the
/// designated u-coordinate, and checks v(E) = 0 there.
/// Throws ProjectionFailure once failed draws outnumber the requested samples.
SymmetryReport check_difference_symmetry(const StencilFunction& E,
                                         const VectorFieldSpec& field,
                                         const std::function<Stencil(Rng&)>& sampler,
                                         DesignatedCoordinate coord, int samples,
                                         double tol, Rng& rng);

/// Numerical rank of the r×(3·nodes) Lie matrix (singular values above
/// rel_tol·σmax).
int lie_matrix_rank(const std::vector<VectorFieldSpec>& fields, const Stencil& z,
                    double rel_tol = 1e-8);

}  // namespace symdisc
