#pragma once

#include "wentzell/modes.hpp"

#include <complex>
#include <vector>

namespace wentzell {

/// (sum_m (omega_m^2)^r |a_m|^2)^{1/2}, omega_m at transverse momentum k.
/// A nonzero coefficient on a mode with omega = 0 makes the norm undefined for r < 0.
double spectral_sobolev_norm(const std::vector<double>& coeffs, const ModeTable& table, double r, double k = 0.0);
double spectral_sobolev_norm(const std::vector<std::complex<double>>& coeffs, const ModeTable& table, double r,
                             double k = 0.0);

} // namespace wentzell
