#include "symdisc/exact.hpp"

#include <cmath>

#include "symdisc/errors.hpp"

namespace symdisc {

double exact_schwarzian(double x, double a, double b, double c, double d) {
    const double den = c * std::sin(x) + d * std::cos(x);
    if (std::abs(den) < kDenominatorFloor) throw PoleError("exact_schwarzian: pole");
    return (a * std::sin(x) + b * std::cos(x)) / den;
}

namespace {

double sech2(double z) {
    const double s = 1.0 / std::cosh(z);
    return s * s;
}

}  // namespace

double exact_kdv_double_soliton(double t, double x, const DoubleSoliton& p) {
    double u = 0.0;
    if (p.c1 > 0) u += 0.5 * p.c1 * sech2(std::sqrt(p.c1) / 2 * (x + p.a1 - p.c1 * t));
    if (p.c2 > 0) u += 0.5 * p.c2 * sech2(std::sqrt(p.c2) / 2 * (x + p.a2 - p.c2 * t));
    return u;
}

double exact_burgers(double t, double x, double nu, double c) {
    const double a = std::abs(x) / (2 * nu);
    const double e2 = std::exp(-2 * a);
    const double tail = 2 * std::exp(-(c + t) / (4 * nu) - a);
    const double s = x < 0 ? -1.0 : (x > 0 ? 1.0 : 0.0);
    return -s * (1 - e2) / (1 + e2 + tail);
}

}  // namespace symdisc
