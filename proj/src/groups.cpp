#include "symdisc/groups.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "symdisc/errors.hpp"

namespace symdisc {

// --- SL(2,R) ---------------------------------------------------------------

SL2Element SL2Element::make(double a, double b, double c, double d) {
    const double det = a * d - b * c;
    if (!(det > 1e-300)) throw DegenerateJet("SL2Element::make: determinant must be positive");
    const double s = 1.0 / std::sqrt(det);
    return {a * s, b * s, c * s, d * s};
}

double apply_sl2(const SL2Element& g, double u) {
    const double den = g.c * u + g.d;
    if (std::fabs(den) < 1e-14) throw PoleError("apply_sl2: cu+d vanishes");
    return (g.a * u + g.b) / den;
}

SL2Element compose(const SL2Element& g, const SL2Element& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
            g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

SL2Element inverse(const SL2Element& g) { return {g.d, -g.b, -g.c, g.a}; }

double distance_mod_sign(const SL2Element& g, const SL2Element& h) {
    auto dist = [](const SL2Element& p, const SL2Element& q, double s) {
        return std::max({std::fabs(p.a - s * q.a), std::fabs(p.b - s * q.b),
                         std::fabs(p.c - s * q.c), std::fabs(p.d - s * q.d)});
    };
    return std::min(dist(g, h, 1.0), dist(g, h, -1.0));
}

// --- KdV ---------------------------------------------------------------------

Node apply_kdv(const KdVGroupElement& g, const Node& z) {
    const double l3 = g.lambda * g.lambda * g.lambda;
    return {l3 * z.t + g.b, g.lambda * z.x + l3 * g.v * z.t + g.a,
            z.u / (g.lambda * g.lambda) + g.v};
}

KdVGroupElement compose(const KdVGroupElement& g, const KdVGroupElement& h) {
    const double lg3 = g.lambda * g.lambda * g.lambda;
    KdVGroupElement r;
    r.lambda = g.lambda * h.lambda;
    r.v = h.v / (g.lambda * g.lambda) + g.v;
    r.a = g.lambda * h.a + lg3 * g.v * h.b + g.a;
    r.b = lg3 * h.b + g.b;
    return r;
}

KdVGroupElement inverse(const KdVGroupElement& g) {
    const double l = 1.0 / g.lambda;
    const double l3 = l * l * l;
    KdVGroupElement r;
    r.lambda = l;
    r.v = -g.v * g.lambda * g.lambda;
    r.b = -g.b * l3;
    // a from requiring compose(r, g) to have zero shift
    r.a = -(l * g.a + l3 * r.v * g.b);
    return r;
}

// --- Burgers -------------------------------------------------------------------

Node apply_burgers(const BurgersGroupElement& g, const Node& z) {
    const double s = std::exp(g.eps4);
    const double tt = z.t + g.eps2;
    return {s * s * tt, s * (z.x + g.eps1 + g.eps3 * tt), (z.u + g.eps3) / s};
}

BurgersGroupElement compose(const BurgersGroupElement& g, const BurgersGroupElement& h) {
    const double sh = std::exp(h.eps4);
    BurgersGroupElement r;
    r.eps4 = g.eps4 + h.eps4;
    r.eps2 = h.eps2 + g.eps2 / (sh * sh);
    r.eps3 = h.eps3 + sh * g.eps3;
    r.eps1 = h.eps1 + g.eps1 / sh - h.eps3 * g.eps2 / (sh * sh);
    return r;
}

BurgersGroupElement inverse(const BurgersGroupElement& g) {
    const double s = std::exp(g.eps4);
    BurgersGroupElement r;
    r.eps4 = -g.eps4;
    r.eps3 = -g.eps3 / s;
    r.eps2 = -s * s * g.eps2;
    r.eps1 = -s * g.eps1 - s * g.eps3 * g.eps2;
    return r;
}

// --- u_xx = 0 -------------------------------------------------------------------

Node apply_affine(const AffineElement& g, const Node& z) {
    return {z.t, g.lambda * z.x + g.a, g.alpha * z.u + g.beta * z.x + g.b};
}

// --- sampling ---------------------------------------------------------------------

SL2Element random_sl2(Rng& rng) {
    for (;;) {
        double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
        double c = rng.uniform(-2, 2), d = rng.uniform(-2, 2);
        double det = a * d - b * c;
        if (std::fabs(det) < 0.2) continue;
        if (det < 0) { a = -a; b = -b; }
        return SL2Element::make(a, b, c, d);
    }
}

KdVGroupElement random_kdv(Rng& rng) {
    KdVGroupElement g;
    g.lambda = std::exp(rng.uniform(-0.5, 0.5));
    g.v = rng.uniform(-2, 2);
    g.a = rng.uniform(-2, 2);
    g.b = rng.uniform(-2, 2);
    return g;
}

BurgersGroupElement random_burgers(Rng& rng) {
    BurgersGroupElement g;
    g.eps1 = rng.uniform(-2, 2);
    g.eps2 = rng.uniform(-2, 2);
    g.eps3 = rng.uniform(-2, 2);
    g.eps4 = rng.uniform(-0.5, 0.5);
    return g;
}

AffineElement random_affine(Rng& rng) {
    AffineElement g;
    g.lambda = rng.sign() * std::exp(rng.uniform(-0.5, 0.5));
    g.alpha = rng.sign() * std::exp(rng.uniform(-0.5, 0.5));
    g.a = rng.uniform(-2, 2);
    g.beta = rng.uniform(-2, 2);
    g.b = rng.uniform(-2, 2);
    return g;
}

// --- vector fields -------------------------------------------------------------

double Stencil::norm_inf() const {
    double m = 0.0;
    for (const auto& s : nodes)
        m = std::max({m, std::fabs(s.z.t), std::fabs(s.z.x), std::fabs(s.z.u)});
    return m;
}

const Node& Stencil::at(int l, int j) const {
    for (const auto& s : nodes)
        if (s.l == l && s.j == j) return s.z;
    throw OutOfDomain("stencil has no node at offset (" + std::to_string(l) + "," +
                      std::to_string(j) + ")");
}

Node& Stencil::at(int l, int j) {
    return const_cast<Node&>(static_cast<const Stencil&>(*this).at(l, j));
}

namespace fields {
namespace {
using Coef = std::function<double(double, double, double)>;
const Coef zero = [](double, double, double) { return 0.0; };
const Coef one = [](double, double, double) { return 1.0; };

VectorFieldSpec make(std::string name, Coef tau, Coef xi, Coef phi) {
    VectorFieldSpec f;
    f.name = std::move(name);
    f.tau = std::move(tau);
    f.xi = std::move(xi);
    f.phi = std::move(phi);
    return f;
}

double alternating(int n, int i) { return ((n + i) % 2 == 0) ? 1.0 : -1.0; }
}  // namespace

VectorFieldSpec d_t() { return make("d_t", one, zero, zero); }
VectorFieldSpec d_x() { return make("d_x", zero, one, zero); }
VectorFieldSpec d_u() { return make("d_u", zero, zero, one); }
VectorFieldSpec u_d_u() {
    return make("u d_u", zero, zero, [](double, double, double u) { return u; });
}
VectorFieldSpec uu_d_u() {
    return make("u^2 d_u", zero, zero, [](double, double, double u) { return u * u; });
}
VectorFieldSpec x_d_x() {
    return make("x d_x", zero, [](double, double x, double) { return x; }, zero);
}
VectorFieldSpec x_d_u() {
    return make("x d_u", zero, zero, [](double, double x, double) { return x; });
}
VectorFieldSpec galilean() {
    return make("t d_x + d_u", zero, [](double t, double, double) { return t; }, one);
}

std::vector<VectorFieldSpec> sl2() { return {d_u(), u_d_u(), uu_d_u()}; }

std::vector<VectorFieldSpec> kdv() {
    return {d_x(), d_t(), galilean(),
            make("x d_x + 3t d_t - 2u d_u", [](double t, double, double) { return 3 * t; },
                 [](double, double x, double) { return x; },
                 [](double, double, double u) { return -2 * u; })};
}

std::vector<VectorFieldSpec> burgers() {
    return {d_x(), d_t(), galilean(),
            make("x d_x + 2t d_t - u d_u", [](double t, double, double) { return 2 * t; },
                 [](double, double x, double) { return x; },
                 [](double, double, double u) { return -u; })};
}

std::vector<VectorFieldSpec> affine5() { return {d_x(), d_u(), x_d_x(), x_d_u(), u_d_u()}; }

std::vector<VectorFieldSpec> dpkdv() {
    auto a = u_d_u();
    a.name = "(-1)^{i+n} u d_u";
    a.weight = alternating;
    auto b = d_u();
    b.name = "(-1)^{i+n} d_u";
    b.weight = alternating;
    return {a, b, d_u()};
}
}  // namespace fields

namespace {

struct Vec3 {
    double t, x, u;
};

Vec3 eval(const VectorFieldSpec& f, const Vec3& z, double w) {
    return {w * f.tau(z.t, z.x, z.u), w * f.xi(z.t, z.x, z.u), w * f.phi(z.t, z.x, z.u)};
}

Vec3 rk4(const VectorFieldSpec& f, Vec3 z, double h, int steps, double w) {
    for (int s = 0; s < steps; ++s) {
        Vec3 k1 = eval(f, z, w);
        Vec3 k2 = eval(f, {z.t + 0.5 * h * k1.t, z.x + 0.5 * h * k1.x, z.u + 0.5 * h * k1.u}, w);
        Vec3 k3 = eval(f, {z.t + 0.5 * h * k2.t, z.x + 0.5 * h * k2.x, z.u + 0.5 * h * k2.u}, w);
        Vec3 k4 = eval(f, {z.t + h * k3.t, z.x + h * k3.x, z.u + h * k3.u}, w);
        z.t += h / 6 * (k1.t + 2 * k2.t + 2 * k3.t + k4.t);
        z.x += h / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
        z.u += h / 6 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u);
        if (!(std::fabs(z.t) < 1e12 && std::fabs(z.x) < 1e12 && std::fabs(z.u) < 1e12))
            throw FlowDivergence("flow of " + f.name + " left the bounded region");
    }
    return z;
}

Node flow_weighted(const VectorFieldSpec& f, const Node& z0, double eps, double w) {
    if (eps == 0.0 || w == 0.0) return z0;
    const Vec3 z{z0.t, z0.x, z0.u};
    int n = std::max(4, static_cast<int>(std::ceil(std::fabs(eps * w) * 16)));
    Vec3 coarse = rk4(f, z, eps / n, n, w);
    double last_err = 0.0;
    for (int it = 0; it < 14; ++it) {
        Vec3 fine = rk4(f, z, eps / (2 * n), 2 * n, w);
        const double scale = 1.0 + std::max({std::fabs(fine.t), std::fabs(fine.x), std::fabs(fine.u)});
        const double err = std::max({std::fabs(fine.t - coarse.t), std::fabs(fine.x - coarse.x),
                                     std::fabs(fine.u - coarse.u)});
        if (err < 1e-14 * scale) return {fine.t, fine.x, fine.u};
        last_err = err / scale;
        coarse = fine;
        n *= 2;
    }
    // roundoff can stall the doubling just above 1e-14; a large gap means a singularity
    if (last_err > 1e-8) throw FlowDivergence("flow of " + f.name + " did not converge");
    return {coarse.t, coarse.x, coarse.u};
}

}  // namespace

Node flow(const VectorFieldSpec& field, const Node& z, double epsilon) {
    return flow_weighted(field, z, epsilon, 1.0);
}

Stencil flow_stencil(const VectorFieldSpec& field, const Stencil& z, double epsilon) {
    Stencil out = z;
    for (auto& s : out.nodes)
        s.z = flow_weighted(field, s.z, epsilon, field.weight_at(z.n + s.l, z.i + s.j));
    return out;
}

double prolonged_directional_derivative(const StencilFunction& F, const VectorFieldSpec& field,
                                        const Stencil& z) {
    const double e = 1e-6 * (1.0 + z.norm_inf());
    const double fp = F(flow_stencil(field, z, e));
    const double fm = F(flow_stencil(field, z, -e));
    return (fp - fm) / (2 * e);
}

namespace {

// Solves E(z with nodes[k].u = s) = 0 by Newton with a secant-free FD slope.
bool project(const StencilFunction& E, Stencil& z, int k) {
    double s = z.nodes[k].z.u;
    for (int it = 0; it < 60; ++it) {
        z.nodes[k].z.u = s;
        double f;
        try {
            f = E(z);
        } catch (const Error&) {
            return false;
        }
        if (!std::isfinite(f)) return false;
        if (std::fabs(f) < 1e-13) return true;
        const double d = 1e-7 * (1.0 + std::fabs(s));
        double fp;
        try {
            z.nodes[k].z.u = s + d;
            fp = E(z);
        } catch (const Error&) {
            return false;
        }
        const double slope = (fp - f) / d;
        if (!std::isfinite(slope) || slope == 0.0) return false;
        s -= f / slope;
    }
    z.nodes[k].z.u = s;
    try {
        return std::fabs(E(z)) < 1e-10;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

SymmetryReport check_difference_symmetry(const StencilFunction& E, const VectorFieldSpec& field,
                                         const std::function<Stencil(Rng&)>& sampler,
                                         DesignatedCoordinate coord, int samples, double tol,
                                         Rng& rng) {
    SymmetryReport rep;
    int failures = 0;
    while (rep.samples < samples) {
        Stencil z = sampler(rng);
        if (!project(E, z, coord.node)) {
            ++failures;
            ++rep.resampled;
            if (failures > samples)
                throw ProjectionFailure("check_difference_symmetry: E = 0 could not be solved "
                                        "for the designated coordinate");
            continue;
        }
        rep.max_abs = std::max(rep.max_abs,
                               std::fabs(prolonged_directional_derivative(E, field, z)));
        ++rep.samples;
    }
    rep.passed = rep.max_abs <= tol;
    return rep;
}

int lie_matrix_rank(const std::vector<VectorFieldSpec>& fields, const Stencil& z,
                    double rel_tol) {
    const int r = static_cast<int>(fields.size());
    const int d = 3 * static_cast<int>(z.nodes.size());
    Eigen::MatrixXd M(r, d);
    for (int a = 0; a < r; ++a) {
        const auto& f = fields[a];
        for (std::size_t k = 0; k < z.nodes.size(); ++k) {
            const auto& s = z.nodes[k];
            const double w = f.weight_at(z.n + s.l, z.i + s.j);
            M(a, 3 * k + 0) = w * f.tau(s.z.t, s.z.x, s.z.u);
            M(a, 3 * k + 1) = w * f.xi(s.z.t, s.z.x, s.z.u);
            M(a, 3 * k + 2) = w * f.phi(s.z.t, s.z.x, s.z.u);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    int rank = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (sv(k) > rel_tol * sv(0)) ++rank;
    return rank;
}

}  // namespace symdisc
