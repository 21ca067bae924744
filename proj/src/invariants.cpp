#include "symdisc/invariants.hpp"

#include "symdisc/errors.hpp"

namespace symdisc {

double cross_ratio(double um1, double u0, double u1, double u2) {
    const double den = checked_den((u1 - um1) * (u2 - u0), "cross_ratio");
    return (u0 - um1) * (u2 - u1) / den;
}

SL2Chain sl2_invariant_chain(double um1, double u0, double u1, double u2) {
    SL2Chain c;
    c.I_im1 = u0 - um1;
    c.I_i = u1 - u0;
    c.I_ip1 = u2 - u1;
    c.J_i = c.I_im1 / checked_den(c.I_i, "sl2 chain J_i");
    c.J_ip1 = c.I_i / checked_den(c.I_ip1, "sl2 chain J_{i+1}");
    c.R = c.J_i / checked_den((1 + c.J_i) * (1 + c.J_ip1), "sl2 chain R");
    return c;
}

// --- KdV -------------------------------------------------------------------------

Stencil make_kdv_stencil(const KdVRows& r) {
    Stencil z;
    for (int j = -2; j <= 2; ++j) z.push(0, j, {r.t0, r.x0[j + 2], r.u0[j + 2]});
    for (int j = -2; j <= 2; ++j) z.push(1, j, {r.t0 + r.k, r.x1[j + 2], r.u1[j + 2]});
    return z;
}

KdVRows kdv_rows(const Stencil& z) {
    KdVRows r;
    r.t0 = z.at(0, 0).t;
    r.k = z.at(1, 0).t - r.t0;
    for (int j = -2; j <= 2; ++j) {
        r.x0[j + 2] = z.at(0, j).x;
        r.u0[j + 2] = z.at(0, j).u;
        r.x1[j + 2] = z.at(1, j).x;
        r.u1[j + 2] = z.at(1, j).u;
    }
    return r;
}

namespace {

struct Row {
    const std::array<double, 5>& x;
    const std::array<double, 5>& u;
    // spacing h_{i+j} = x_{i+j+1} - x_{i+j}, j in -2..1
    double h(int j) const { return checked_den(x[j + 3] - x[j + 2], "kdv spacing"); }
    double Du(int j) const { return (u[j + 3] - u[j + 2]) / h(j); }
};

}  // namespace

KdVInvariants kdv_invariants(const Stencil& z) {
    const KdVRows r = kdv_rows(z);
    const double k = checked_den(r.k, "kdv time step");
    const Row rows[2] = {{r.x0, r.u0}, {r.x1, r.u1}};
    KdVInvariants out;
    for (int l = 0; l < 2; ++l)
        for (int j = -1; j <= 1; ++j) out.v[3 * l + j + 1] = rows[l].h(j - 1) / rows[l].h(j);
    const double h0 = rows[0].h(0);
    const double sigma = r.x1[2] - r.x0[2];
    out.v[6] = rows[1].h(0) / h0;
    out.v[7] = h0 * h0 * h0 / k;
    out.v[8] = (sigma - k * r.u0[2]) / h0;
    out.v[9] = (r.u1[2] - r.u0[2]) * h0 * h0;
    for (int l = 0; l < 2; ++l)
        for (int j = -2; j <= 1; ++j) out.v[10 + 4 * l + j + 2] = k * rows[l].Du(j);
    return out;
}

double kdv_invariant(const Stencil& z, int index) { return kdv_invariants(z).v.at(index); }

double kdv_Q(const Stencil& z, int row, int shift) {
    const KdVInvariants q = kdv_invariants(z);
    const int c = shift;
    if (c != 0 && c != -1) throw OutOfDomain("kdv_Q: shift must be 0 or -1");
    const double Hc1 = q.H(row, c + 1), Hc = q.H(row, c);
    const double Kc1 = q.K(row, c + 1), Kc = q.K(row, c), Kcm = q.K(row, c - 1);
    return Hc1 * (Kc1 - Kc) / checked_den(1 + Hc1, "Q") - (Kc - Kcm) / checked_den(1 + Hc, "Q");
}

// --- Burgers -------------------------------------------------------------------------

Stencil make_burgers_stencil(const BurgersRows& r) {
    Stencil z;
    for (int j = -1; j <= 1; ++j) z.push(0, j, {r.t0, r.x0[j + 1], r.u0[j + 1]});
    for (int j = -1; j <= 1; ++j) z.push(1, j, {r.t0 + r.k, r.x1[j + 1], r.u1[j + 1]});
    return z;
}

std::array<double, 9> burgers_invariants(const Stencil& z) {
    const double k = checked_den(z.at(1, 0).t - z.at(0, 0).t, "burgers time step");
    auto h = [&](int l, int j) {  // h_{i+j}, j in {-1, 0}
        return checked_den(z.at(l, j + 1).x - z.at(l, j).x, "burgers spacing");
    };
    auto Du = [&](int l, int j) { return (z.at(l, j + 1).u - z.at(l, j).u) / h(l, j); };
    const double sigma = z.at(1, 0).x - z.at(0, 0).x;
    const double u0 = z.at(0, 0).u, u1 = z.at(1, 0).u;
    std::array<double, 9> I{};
    I[0] = h(0, 0) / h(0, -1);
    I[1] = h(1, 0) / h(1, -1);
    I[2] = h(0, 0) * h(1, 0) / k;
    I[3] = h(0, 0) * h(0, -1) * (Du(0, 0) - Du(0, -1));
    I[4] = h(1, 0) * h(1, -1) * (Du(1, 0) - Du(1, -1));
    I[5] = h(0, 0) * (sigma / k - u0);
    I[6] = h(1, 0) * (sigma / k - u1);
    I[7] = h(0, 0) * h(0, 0) * (Du(0, 0) + 1 / k);
    I[8] = h(1, 0) * h(1, 0) * (Du(1, 0) - 1 / k);
    return I;
}

double burgers_invariant(const Stencil& z, int index) { return burgers_invariants(z).at(index); }

}  // namespace symdisc
