#pragma once

#include "wentzell/function_space.hpp"
#include "wentzell/params.hpp"

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace wentzell {

enum class Parity { even, odd };
enum class Side { minus, plus };

const char* to_string(Parity parity) noexcept;

struct ModeEntry {
    int m = 0;
    double q = 0.0;
    Parity parity = Parity::even;
    double c_norm = 0.0;
    /// Boundary value at the plus side; the minus side carries (-1)^m d_bdy.
    double d_bdy = 0.0;

    double omega(double mu, double k = 0.0) const;
    double boundary_value(Side side) const noexcept;
};

/// Strip spectrum for m = 0..M_max. Immutable; the constructor checks
/// ordering, parity alternation and d_m != 0.
class ModeTable {
public:
    ModeTable(PhysicalParams params, std::vector<ModeEntry> entries, double residual_tol);

    const PhysicalParams& params() const noexcept { return params_; }
    const std::vector<ModeEntry>& entries() const noexcept { return entries_; }
    const ModeEntry& operator[](std::size_t m) const { return entries_.at(m); }
    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t M_max() const noexcept { return entries_.size() - 1; }
    double residual_tol() const noexcept { return residual_tol_; }
    double omega(std::size_t m, double k = 0.0) const { return entries_.at(m).omega(params_.mu, k); }

    /// Same spectrum with a different mass (q, c_m, d_m do not depend on mu).
    ModeTable with_mu(double mu) const;

private:
    PhysicalParams params_;
    std::vector<ModeEntry> entries_;
    double residual_tol_;
};

/// Open interval in q guaranteed to contain exactly one root for m >= 1.
std::pair<double, double> q_bracket(int m, double S);

/// Eigen-equation residual in the scaled form, with x = qS:
/// odd  (x sin x - (S/c) cos x) / sqrt(x^2 + (S/c)^2),
/// even (sin x + (c/S) x cos x) / sqrt(1 + (c x/S)^2).
/// Both vanish exactly on the roots of tan(qS) = 1/(cq) resp. tan(qS) = -cq.
double eigen_residual(int m, double q, const PhysicalParams& p);

double solve_q(int m, const PhysicalParams& p);

ModeTable build_table(std::size_t M_max, const PhysicalParams& p, double residual_tol = 1e-12);

struct AsymptoticRow {
    int m = 0;
    bool skipped = false;
    bool in_bracket = false;
    double residual = 0.0;
    bool q_in_bound = false;
    double cm_scaled = 0.0; ///< |c_m - 1| m^2
    double d_ratio = 0.0;   ///< |d_m| pi (m-1) c / (2 sqrt(S)); tends to 1
    bool d_law = false;
};

struct AsymptoticReport {
    double delta = 0.1;
    int m_start = 50;
    std::vector<AsymptoticRow> rows;
    bool brackets_pass = true;
    bool residuals_pass = true;
    bool q_bounds_pass = true;
    bool cm_bounded_pass = true;
    bool d_law_pass = true;
    double cm_constant = 0.0;  ///< max |c_m - 1| m^2 over the asymptotic range
    double cm_reference = 0.0; ///< |c_m - 1| m^2 at m_start
    double max_residual = 0.0;

    bool all_pass() const noexcept
    {
        return brackets_pass && residuals_pass && q_bounds_pass && cm_bounded_pass && d_law_pass;
    }
};

AsymptoticReport verify_table(const ModeTable& table, double delta = 0.1, int m_start = 50);

/// Normalized strip profile c_m S^{-1/2} cos/sin(q_m z).
double eval_mode(const ModeEntry& entry, double z, const PhysicalParams& p);
double eval_mode_derivative(const ModeEntry& entry, double z, const PhysicalParams& p);
/// Half-space profile (pi/2 (c^2 q^2 + 1))^{-1/2} (cos qz - cq sin qz).
double eval_halfspace_mode(double q, double z, const PhysicalParams& p);

/// Mode m sampled on a strip grid, with boundary values from d_m.
BulkBoundaryFunction mode_function(const ModeEntry& entry, const Grid1D& grid, const PhysicalParams& p);

std::vector<double> project(const BulkBoundaryFunction& F, const ModeTable& table,
                            Quadrature rule = Quadrature::corrected_trapezoid);
std::vector<std::complex<double>> project(const ComplexBulkBoundaryFunction& F, const ModeTable& table,
                                          Quadrature rule = Quadrature::corrected_trapezoid);

BulkBoundaryFunction synthesize(const std::vector<double>& coeffs, const ModeTable& table, const Grid1D& grid);

} // namespace wentzell
