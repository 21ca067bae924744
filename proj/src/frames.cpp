#include "symdisc/frames.hpp"

#include <cmath>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

double sign1(double v) { return v < 0 ? -1.0 : 1.0; }

}  // namespace

SL2Element sl2_differential_frame(double u, double ux, double uxx) {
    const double m = std::abs(ux);
    if (m < kDenominatorFloor) throw DegenerateJet("sl2 differential frame: u_x = 0");
    const double r = 1.0 / std::sqrt(m);
    const double r3 = r / m;
    SL2Element g;
    g.a = r;
    g.b = -u * r;
    g.c = uxx * r3 / 2;
    g.d = (2 * ux * ux - u * uxx) * r3 / 2;
    return g;
}

SL2Jet apply_sl2_jet(const SL2Element& g, const SL2Jet& j) {
    const double den = checked_den(g.c * j.u + g.d, "sl2 jet");
    SL2Jet out;
    out.u = (g.a * j.u + g.b) / den;
    out.ux = j.ux / (den * den);
    out.uxx = j.uxx / (den * den) - 2 * g.c * j.ux * j.ux / (den * den * den);
    return out;
}

double sl2_frame_sign(const SL2DiscreteFrameInput& in) {
    return sign1((in.u1 - in.u0) * (in.u0 - in.um1) * (in.u1 - in.um1));
}

// Three-point normalization solved directly. With p = u_{i+1}-u_i,
// q = u_i-u_{i-1} and d' = d + c·u_i:
//   c = d'(p-q)/(2pq),  a = hε d'(p+q)/(2pq),  a·d' = 1.
SL2Element sl2_discrete_frame_total(const SL2DiscreteFrameInput& in) {
    const double p = in.u1 - in.u0, q = in.u0 - in.um1;
    checked_den(p, "sl2 frame: u_{i+1} = u_i");
    checked_den(q, "sl2 frame: u_i = u_{i-1}");
    checked_den(p + q, "sl2 frame: u_{i+1} = u_{i-1}");
    const double eps = sl2_frame_sign(in);
    const double d2 = 2 * p * q / (in.h * eps * (p + q));
    if (!(d2 > 0)) throw FrameSingularity("sl2 frame: no real solution");
    const double dp = std::sqrt(d2);
    SL2Element g;
    g.c = dp * (p - q) / (2 * p * q);
    g.a = in.h * eps * dp * (p + q) / (2 * p * q);
    g.b = -g.a * in.u0;
    g.d = dp - g.c * in.u0;
    return g;
}

SL2Element sl2_discrete_frame(const SL2DiscreteFrameInput& in) {
    const double p = in.u1 - in.u0, q = in.u0 - in.um1;
    if (std::abs(p - q) <= kDenominatorFloor * (std::abs(p) + std::abs(q)))
        throw FrameSingularity("sl2 frame: D^2 u_i = 0");
    return sl2_discrete_frame_total(in);
}

// --- KdV -------------------------------------------------------------------------

KdVGroupElement kdv_discrete_frame(const KdVFrameInput& in) {
    if (!(in.dxu > kDenominatorFloor)) throw DegenerateJet("kdv frame: slope must be positive");
    KdVGroupElement g;
    g.lambda = std::cbrt(in.dxu);
    g.v = -in.u / (g.lambda * g.lambda);
    g.b = -in.t * in.dxu;
    g.a = -g.lambda * in.x + g.lambda * in.t * in.u;
    return g;
}

KdVFrameInput kdv_frame_input(const Stencil& z) {
    const Node& m = z.at(0, -1);
    const Node& c = z.at(0, 0);
    const Node& p = z.at(0, 1);
    KdVFrameInput in;
    in.t = c.t;
    in.x = c.x;
    in.u = c.u;
    const double du0 = (p.u - c.u) / checked_den(p.x - c.x, "kdv frame spacing");
    const double dum = (c.u - m.u) / checked_den(c.x - m.x, "kdv frame spacing");
    in.dxu = (du0 + dum) / 2;
    return in;
}

// --- Burgers -------------------------------------------------------------------------

double burgers_frame_argument(const BurgersFrameInput& in) {
    return (1 + in.k * in.dxu) * (in.dtu + in.u_next * in.dxu);
}

BurgersFrame burgers_discrete_frame(const BurgersFrameInput& in) {
    const double A = burgers_frame_argument(in);
    if (!(A > kDenominatorFloor)) throw DegenerateJet("burgers frame: cube-root argument not positive");
    BurgersFrame f;
    f.g.eps1 = -in.x;
    f.g.eps2 = -in.t;
    f.g.eps3 = -in.u;
    f.g.eps4 = std::log(A) / 3;
    f.eps5 = -in.dxu;
    return f;
}

BurgersFrameInput burgers_frame_input(const Stencil& z) {
    const Node& m = z.at(0, -1);
    const Node& c = z.at(0, 0);
    const Node& p = z.at(0, 1);
    const Node& c1 = z.at(1, 0);
    BurgersFrameInput in;
    in.t = c.t;
    in.x = c.x;
    in.u = c.u;
    in.u_next = c1.u;
    in.k = checked_den(c1.t - c.t, "burgers frame time step");
    const double du0 = (p.u - c.u) / checked_den(p.x - c.x, "burgers frame spacing");
    const double dum = (c.u - m.u) / checked_den(c.x - m.x, "burgers frame spacing");
    in.dxu = (du0 + dum) / 2;
    const double sigma = c1.x - c.x;
    in.dtu = (c1.u - c.u) / in.k - sigma / in.k * in.dxu;
    return in;
}

// --- invariantization ----------------------------------------------------------------

Stencil normalize(FrameFamily fam, const Stencil& z) {
    Stencil out = z;
    switch (fam) {
        case FrameFamily::SL2Discrete: {
            SL2DiscreteFrameInput in;
            in.um1 = z.at(0, -1).u;
            in.u0 = z.at(0, 0).u;
            in.u1 = z.at(0, 1).u;
            in.u2 = z.at(0, 2).u;
            in.h = z.at(0, 1).x - z.at(0, 0).x;
            const SL2Element g = sl2_discrete_frame_total(in);
            for (auto& n : out.nodes) n.z.u = apply_sl2(g, n.z.u);
            break;
        }
        case FrameFamily::KdV: {
            const KdVGroupElement g = kdv_discrete_frame(kdv_frame_input(z));
            for (auto& n : out.nodes) n.z = apply_kdv(g, n.z);
            break;
        }
        case FrameFamily::Burgers: {
            const BurgersGroupElement g = burgers_discrete_frame(burgers_frame_input(z)).g;
            for (auto& n : out.nodes) n.z = apply_burgers(g, n.z);
            break;
        }
    }
    return out;
}

double invariantize(FrameFamily fam, const StencilFunction& F, const Stencil& z) {
    return F(normalize(fam, z));
}

}  // namespace symdisc
