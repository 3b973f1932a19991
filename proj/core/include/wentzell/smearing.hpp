#pragma once

#include "wentzell/modes.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace wentzell {

using TimeFunction = std::function<double(double)>;
using SpaceTimeFunction = std::function<double(double, double)>;

/// g(t) placed at z_s. A value source pairs as g(t) phi(t, z_s); a
/// z_derivative source pairs as g(t) d_z phi(t, z_s), i.e. it stands for
/// -g(t) delta'(z - z_s) in the usual distributional sign.
struct PointSource {
    enum class Kind { value, z_derivative };
    double z = 0.0;
    Kind kind = Kind::value;
    TimeFunction g;
};

/// Space-time smearing (f(t), f|(t)) of L2(bulk) + L2(boundary), paired with
/// the weighted product. The boundary field phi|(g) corresponds to (0, g/c);
/// see boundary_smearing. Time support must lie in [t_min, t_max].
struct TestFunction {
    SpaceTimeFunction bulk;
    std::array<TimeFunction, 2> boundary; ///< minus side, plus side
    std::vector<PointSource> sources;
    double t_min = -1.0;
    double t_max = 1.0;
};

TestFunction boundary_smearing(TimeFunction g, Side side, double c, double t_min, double t_max);

struct SmearingGrid {
    double t_lo = -1.0;
    double t_hi = 1.0;
    std::size_t n_t = 801;   ///< time intervals
    std::size_t n_z = 1024;  ///< space intervals for the bulk integral
};

/// f^+_m = (2 pi)^{-1/2} int dt <Phi_m, F(t)> e^{+i omega_m t}, and f^- with e^{-i omega_m t}.
struct SmearedCoefficients {
    std::vector<std::complex<double>> plus;
    std::vector<std::complex<double>> minus;

    std::size_t size() const noexcept { return plus.size(); }
    double energy() const;
};

/// Coefficients for modes m = 0..M (M = table.M_max() when omitted).
SmearedCoefficients smeared_coeffs(const TestFunction& f, const ModeTable& table, const SmearingGrid& grid,
                                   std::optional<std::size_t> M = std::nullopt);

struct SourceRelationReport {
    std::vector<std::complex<double>> lhs;
    std::vector<std::complex<double>> rhs;
    double max_residual = 0.0; ///< max |lhs - rhs| / max |rhs|
    bool pass = false;
};

/// Mode-by-mode check of phi|_pm((d_t^2 + mu^2) g) = -/+ c^{-1} phi(g delta'(z -/+ S)),
/// with the z_derivative pairing above. boundary_values, when given, replace
/// d_m on the left-hand side (negative control).
SourceRelationReport source_relation_check(const TimeFunction& g, const TimeFunction& g_dd, double t_min,
                                           double t_max, const ModeTable& table, std::size_t M, Side side,
                                           const SmearingGrid& grid,
                                           const std::optional<std::vector<double>>& boundary_values = std::nullopt,
                                           double tol = 1e-8);

} // namespace wentzell
