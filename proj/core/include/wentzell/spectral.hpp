#pragma once

#include "wentzell/modes.hpp"

#include <memory>
#include <vector>

namespace wentzell {

struct EnergyReport {
    double bulk_energy = 0.0;
    double boundary_energy = 0.0;
    double total = 0.0;
};

/// Mode coefficients of position (a) and velocity (b) at time t.
struct SpectralState {
    std::vector<double> a;
    std::vector<double> b;
    std::shared_ptr<const ModeTable> table;
    double t = 0.0;
    double k = 0.0;

    SpectralState(std::vector<double> a_, std::vector<double> b_, std::shared_ptr<const ModeTable> table_,
                  double t_ = 0.0, double k_ = 0.0);

    static SpectralState from_cauchy(const CauchyData& data, std::shared_ptr<const ModeTable> table,
                                     double k = 0.0, Quadrature rule = Quadrature::corrected_trapezoid);

    CauchyData to_cauchy(const Grid1D& grid) const;
};

/// Exact propagation by duration dt; the result carries time s.t + dt.
SpectralState spectral_evolve(const SpectralState& s, double dt);

/// 1/2 sum (b^2 + omega^2 a^2), split into the boundary part
/// (c/2) sum_sides (phi|_t^2 + (mu^2 + k^2) phi|^2) and the remainder.
EnergyReport energy(const SpectralState& s);

/// sum_m (a_A b_B - b_A a_B): the symplectic form in mode coordinates.
double symplectic_form(const SpectralState& A, const SpectralState& B);

} // namespace wentzell
