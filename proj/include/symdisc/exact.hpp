#pragma once

namespace symdisc {

/// (a sin x + b cos x)/(c sin x + d cos x). Throws PoleError at zeros of
/// the denominator.
double exact_schwarzian(double x, double a, double b, double c, double d);

struct DoubleSoliton {
    double c1 = 1.0, c2 = 0.5, a1 = 20.0, a2 = 5.0;
};

/// Σ_j ½c_j sech²(√c_j/2 (x + a_j - c_j t)), a solution of u_t + 6uu_x + u_xxx = 0
/// when the two profiles are well separated (exactly when c2 = 0).
double exact_kdv_double_soliton(double t, double x, const DoubleSoliton& p);

/// -sinh(x/2ν) / (cosh(x/2ν) + exp(-(c+t)/4ν)), evaluated without overflow.
double exact_burgers(double t, double x, double nu, double c);

}  // namespace symdisc
