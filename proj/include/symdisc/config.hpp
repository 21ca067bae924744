#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace symdisc {

/// Every key the run configuration accepts, with its default. Unknown keys
/// are rejected.
struct ExperimentConfig {
    std::string equation = "kdv";  // schwarzian | kdv | burgers | uxx
    std::string scheme;            // per equation; empty picks the invariant scheme
    std::string strategy = "adaptive";  // kdv: lagrangian | adaptive | projection
    double domain_a = -30.0, domain_b = 30.0;
    int N = 128;
    double C = 0.1;  // k = C h³ (kdv) or C h² (burgers)
    double final_time = 40.0;
    double nu = 0.001;
    double alpha = 10.0;
    std::string ic = "double_soliton";
    // double soliton
    double c1 = 1.0, c2 = 0.5, a1 = 20.0, a2 = 5.0;
    double kdv_nonlinearity = 6.0;  // μ in u_t + μuu_x + u_xxx = 0
    // burgers
    double burgers_c = 0.25;
    std::string limiter = "minmod";
    std::string theta_index = "current";
    // schwarzian
    double h = 0.01;
    double schwarzian_F = 2.0;
    double rel_tol = 1e-12;
    // uxx
    double uxx_f = 1.0;
    double uxx_slope = 1.0, uxx_intercept = 0.0;
    // constant initial data
    double ic_value = 0.0;
    // numerics and output
    double newton_tol = 1e-10;
    int newton_max_iter = 50;
    double tangling_factor = 1e-3;
    int snapshot_every = 0;  // 0 means ceil(steps/200)
    std::string output = "snapshots.csv";
    std::string diagnostics = "diagnostics.csv";
    std::uint64_t seed = 1;

    std::set<std::string> given;  // keys present in the file
};

/// Parses `key = value` lines; `#` starts a comment. Throws ConfigError.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// Cross-field checks (N ≥ 8, a < b, final time > 0, known ids, ...).
void check_config(const ExperimentConfig& cfg);

}  // namespace symdisc
