#pragma once

#include <vector>

namespace wentzell {

struct ReflectionValue {
    double phi = 0.0;
    double phi_bdy = 0.0;
};

/// Half-space, mu = 0: an incoming pulse G_eps(t + z), G_eps the unit-mass
/// Gaussian of width eps, reflected by the Wentzell boundary at z = 0:
/// phi = G(t+z) - G(t-z) + 2 c^{-1} (E * G)(t - z), E(s) = exp(-s/c) theta(s).
ReflectionValue explicit_solution(double t, double z, double eps, double c);
/// Time derivative of explicit_solution.
ReflectionValue explicit_velocity(double t, double z, double eps, double c);

struct ReflectionConfig {
    double eps = 0.02;
    double c = 1.0;
    double h = 1.0 / 2048.0;
    double cfl = 0.5;
    double t0 = -0.5;
    double t_end = 3.0;
    /// Domain length; 0 picks t_end - t0 + 0.5 so the far end stays out of reach.
    double length = 0.0;
};

struct ReflectionResult {
    std::vector<double> t;
    std::vector<double> fdtd_trace;
    std::vector<double> exact_trace;
    double sup_error = 0.0;
    double fdtd_at_1 = 0.0;
    double exact_at_1 = 0.0;
    double limit_at_1 = 0.0; ///< eps -> 0 value 2 c^{-1} e^{-1/c}
};

ReflectionResult run_reflection(const ReflectionConfig& cfg = {});

} // namespace wentzell
