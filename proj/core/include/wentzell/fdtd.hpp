#pragma once

#include "wentzell/function_space.hpp"
#include "wentzell/params.hpp"
#include "wentzell/spectral.hpp"

#include <cstddef>
#include <vector>

namespace wentzell {

/// Leapfrog state. Interior nodes follow phi_tt = phi_zz - (mu^2 + k^2) phi;
/// each boundary node is the boundary degree of freedom and follows
/// phi|_tt = -(mu^2 + k^2) phi| + c^{-1} d_perp phi with a second-order inward
/// one-sided stencil. For the half-space the far grid end is held at zero.
class FdtdState {
public:
    /// Starts from Cauchy data using a second-order Taylor step for phi(-dt).
    /// Stored boundary values override the bulk endpoint samples.
    static FdtdState from_cauchy(const CauchyData& data, const PhysicalParams& p, double cfl, double k = 0.0,
                                 double t0 = 0.0);

    const Grid1D& grid() const noexcept { return grid_; }
    const PhysicalParams& params() const noexcept { return p_; }
    const std::vector<double>& phi() const noexcept { return phi_; }
    const std::vector<double>& phi_prev() const noexcept { return phi_prev_; }
    double t() const noexcept { return t_; }
    double dt() const noexcept { return dt_; }
    double k() const noexcept { return k_; }
    std::size_t steps() const noexcept { return steps_; }
    std::vector<double> boundary() const;

    void advance(std::size_t n = 1);
    /// Next time level without mutating the state.
    std::vector<double> peek_next() const;
    /// Position and centered velocity as Cauchy data at the current time.
    CauchyData cauchy() const;

private:
    FdtdState(Grid1D grid, PhysicalParams p, double dt, double k);
    void acceleration(const std::vector<double>& u, std::vector<double>& out) const;

    Grid1D grid_;
    PhysicalParams p_;
    std::vector<double> phi_;
    std::vector<double> phi_prev_;
    mutable std::vector<double> scratch_;
    double t_ = 0.0;
    double dt_ = 0.0;
    double k_ = 0.0;
    std::size_t steps_ = 0;
};

FdtdState fdtd_step(const FdtdState& s);

/// Discrete energy with centered velocity (phi^{n+1} - phi^{n-1}) / (2 dt)
/// and second-order z derivatives.
EnergyReport energy(const FdtdState& s);

/// Energy restricted to [z_lo, z_hi]; boundary terms count when their node lies inside.
EnergyReport energy_on(const FdtdState& s, double z_lo, double z_hi);

struct CausalityReport {
    double t = 0.0;
    std::size_t steps = 0;
    /// max |phi| outside the discrete cone: initial support widened by one node per step plus one halo node.
    double discrete_leak = 0.0;
    /// max |phi| outside [z0 - r - t, z0 + r + t]; a diagnostic of numerical dispersion.
    double physical_leak = 0.0;
    bool boundary_reached = false;
    bool pass = true;
};

/// Runs the FDTD scheme from data supported in [z0 - r, z0 + r] up to time t.
CausalityReport causality_probe(const CauchyData& data, const PhysicalParams& p, double z0, double r, double t,
                                double tol = 1e-8, double cfl = 0.5);

struct DependenceReport {
    double initial_region_energy = 0.0; ///< energy on S0 at t = 0
    double total_energy = 0.0;
    double max_dependence_energy = 0.0; ///< max over t of the energy in D+(S0) at time t
    double t_end = 0.0;
};

/// Energy in the domain of dependence of S0 = [s_lo, s_hi]. Ends of S0 that sit
/// on a boundary stay fixed; interior ends move inward at unit speed.
DependenceReport domain_of_dependence_energy(const CauchyData& data, const PhysicalParams& p, double s_lo,
                                             double s_hi, double t_end, double cfl = 0.5);

} // namespace wentzell
