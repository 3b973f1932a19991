#pragma once

#include "wentzell/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wentzell::cli {

enum ExitCode : int {
    exit_pass = 0,
    exit_validation = 1,
    exit_runtime = 2,
    exit_acceptance = 3,
};

struct RunConfig {
    double S = 1.0;
    double c = 1.0;
    double mu = 1.0;
    int d = 1;
    std::string geometry = "strip";
    std::size_t max = 200;
    double residual_tol = 1e-12;
    std::optional<std::size_t> grid_n; ///< strip: intervals on [-S, S]; reflection: intervals per unit length
    double cfl = 0.5;
    std::optional<double> t_end;
    std::size_t samples = 200;
    std::size_t snapshots = 0;
    std::size_t cutoff = 100;
    std::optional<std::size_t> holo_M;
    std::string scenario = "modes";
    std::string method = "fdtd";
    bool fig2 = false;
    std::string out = "wentzell_out";
    std::optional<std::string> cache_dir;
    std::vector<int> criteria;

    /// Throws a validation error for inconsistent settings.
    void validate(const std::string& command) const;
    PhysicalParams params() const;
};

int cmd_modes(const RunConfig& cfg);
int cmd_evolve(const RunConfig& cfg);
int cmd_twopoint(const RunConfig& cfg);
int cmd_holo(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

} // namespace wentzell::cli
