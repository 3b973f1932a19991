#pragma once

#include "wentzell/modes.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace wentzell {

/// Strip boundary two-point function options. Both sides carry the weights
/// d_m^2, so the side only labels the output.
struct TwoPointSpec {
    Side side = Side::plus;
    std::size_t M = 100; ///< highest included mode
    std::size_t m_first = 0;
    int d = 1;
    double tail_delta = 0.15; ///< slack on the |d_m| asymptotic law used for tail bounds

    void validate(const ModeTable& table) const;
};

struct TwoPointValue {
    std::complex<double> value;
    double tail_bound = 0.0;    ///< bound on the omitted modes
    double quad_error = 0.0;    ///< quadrature error estimate (half-space)
};

/// d = 1: sum_m d_m^2 exp(-i mu_m x0) / (2 mu_m), mu_m = sqrt(q_m^2 + mu^2).
/// d >= 2: spacelike points only, through spacelike_2pt_bessel.
TwoPointValue boundary_2pt_strip(double x0, double x, const ModeTable& table, const TwoPointSpec& spec);

/// Bound on sum_{m > M} d_m^2 / (2 mu_m) from the large-m law of d_m.
double strip_tail_bound(std::size_t M, const PhysicalParams& p, double delta = 0.15);

struct HalfSpaceSpec {
    double q_max = 1e4;
    double rel_tol = 1e-10;
    int d = 1;
};

/// int_0^{q_max} dq 2/(pi (c^2 q^2 + 1)) Delta_+^{sqrt(mu^2+q^2)}(x0, x); d = 1 only
/// for timelike x0, spacelike points for d >= 2.
TwoPointValue boundary_2pt_halfspace(double x0, double x, const PhysicalParams& p, const HalfSpaceSpec& spec = {});

struct QuadratureValue {
    double value = 0.0;
    double error = 0.0;
};

/// int_0^inf 2/(pi (c^2 q^2 + 1)) dq, which equals 1/c.
QuadratureValue halfspace_weight_normalization(double c);

struct BesselSum {
    double value = 0.0;
    double last_term = 0.0;
};

/// sum_m d_m^2 (2 pi)^{-d/2} (mu_m / r)^{d/2 - 1} K_{d/2-1}(mu_m r), r = sqrt(x2).
BesselSum spacelike_2pt_bessel(double x2, const ModeTable& table, const TwoPointSpec& spec);

/// Single-mass free-field value in d dimensions at spacelike r.
double free_spacelike_2pt(double mass, double r, int d);

/// 2i Im Delta_+ from the d = 2 Pauli-Jordan function of each mass:
/// -i/2 sgn(x0) theta(x0^2 - x^2) J_0(mu_m sqrt(x0^2 - x^2)).
std::complex<double> commutator_boundary(double x0, double x, const ModeTable& table, const TwoPointSpec& spec);

struct SpacetimePoint {
    double x0 = 0.0;
    double x = 0.0;
};

struct CausalityCheck {
    double max_abs = 0.0;
    std::size_t spacelike_points = 0;
    bool pass = true;
};

CausalityCheck causality_check(const std::vector<SpacetimePoint>& points, const ModeTable& table,
                               const TwoPointSpec& spec, double tol = 1e-10);

struct TailReport {
    std::size_t M = 0;
    double partial_sum = 0.0;     ///< sum_{m <= M} w_m
    double exact_total = 0.0;     ///< 1/c from completeness (table version), else NaN
    double observed_tail = 0.0;   ///< exact_total - partial_sum
    double analytic_tail = 0.0;   ///< (2/(c pi))^2 S sum_{m > M} (m-1)^{-2}
    double ratio = 0.0;           ///< observed / analytic
    double cauchy_increment = 0.0; ///< sum_{M < m <= 2M} w_m
    double cauchy_ratio = 0.0;    ///< increment(M -> 2M) / increment(M/2 -> M)
    bool divergent = false;
    bool pass = false;
};

/// Square-summability of d_m: the table must hold at least 2M modes.
TailReport tail_convergence(const ModeTable& table, std::size_t M);
/// Divergence diagnostics for arbitrary weights w_m (e.g. Neumann-type constants).
TailReport tail_convergence(const std::vector<double>& weights, std::size_t M);

} // namespace wentzell
