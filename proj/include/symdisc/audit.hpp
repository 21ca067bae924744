#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symdisc {

/// |a-b| / max(1, |a|, |b|): relative for large values, absolute near zero.
double relative_deviation(double a, double b);

struct AuditOptions {
    int configurations = 20;  // random admissible configurations
    int elements = 100;       // random group elements per configuration and direction
    std::uint64_t seed = 1;
    double tol = 1e-9;
};

struct AuditDirection {
    std::string name;
    double max_deviation = 0.0;
    int trials = 0;
    bool passed = false;
};

struct AuditReport {
    std::string scheme;
    std::string kind;  // strong (residual values) or weak (stepped solutions)
    std::vector<AuditDirection> directions;
    int resampled = 0;  // degenerate draws replaced
    double tol = 0.0;
    bool passed = false;
    // naive scheme only: largest gap between the boost deviation and
    // v·(u_{i+1}-u_{i-1})/(2h)
    double boost_prediction_error = 0.0;
};

/// Registered ids: schwarzian, schwarzian-invariant, schwarzian-invariantized,
/// uxx, kdv-6pt, kdv-10pt, burgers, naive-kdv.
std::vector<std::string> audit_schemes();

/// Compares residuals (strong) or steps (weak) before and after random group
/// transformations, one row per generator direction plus the full group and
/// the identity. Throws ConfigError for an unknown id.
AuditReport invariance_audit(const std::string& scheme, const AuditOptions& opt);

struct ConvergenceRow {
    double h = 0.0;
    double error = 0.0;
    double order = 0.0;  // log(e_prev/e)/log(h_prev/h); NaN on the first row
};

/// Registered ids: schwarzian (u = x³, F = -4/x² on [1,2]), schwarzian-tan
/// (F = 2 on [0,1]), naive-kdv (single soliton to t = 0.1), constant (naive
/// scheme on constant data). Errors are max-norm over the grid, at the final
/// time for the time-dependent ids.
std::vector<ConvergenceRow> convergence_study(const std::string& scheme, const std::vector<double>& hs);

std::vector<double> default_h_list(const std::string& scheme);

}  // namespace symdisc
