#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "symdisc/config.hpp"
#include "symdisc/state.hpp"

namespace symdisc {

struct DiagnosticRow {
    long step = 0;
    double t = 0.0;
    double min_spacing = 0.0;
    double tv = 0.0;
    double residual_inf = 0.0;
    int newton_iters = 0;
    std::string status = "ok";
};

struct RunOutput {
    std::vector<GridState> snapshots;
    std::vector<DiagnosticRow> diagnostics;
    std::string status = "completed";  // completed | tangled | newton_divergence | divergence
    std::string message;
    double max_equidistribution_residual = 0.0;
    double initial_spacing = 0.0;
    GridState final_state;

    bool ok() const { return status == "completed"; }
};

/// Runs the configured experiment. Numerical failures end the run with a
/// status and keep the partial output; config errors throw ConfigError.
RunOutput run_experiment(const ExperimentConfig& cfg);

void write_snapshots_csv(const RunOutput& out, std::ostream& os);
void write_diagnostics_csv(const RunOutput& out, std::ostream& os);

/// Local maxima above `threshold`·max(u), as node indices.
std::vector<std::size_t> local_maxima(const std::vector<double>& u, double threshold);

}  // namespace symdisc
