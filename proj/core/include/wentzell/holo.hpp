#pragma once

#include "wentzell/modes.hpp"
#include "wentzell/smearing.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wentzell {

/// chi(u) = exp(1 - 1/(1 - 4u^2)) on |u| < 1/2, zero outside; chi(0) = 1.
double bump_chi(double u);
inline constexpr const char* bump_chi_name = "exp(1 - 1/(1 - 4u^2)) on |u| < 1/2";

/// Smallest safe bump scale for modes m_first..M: the supports
/// |omega^2 - omega_m^2| <= 1/(2a) must be pairwise disjoint and clear omega = 0,
/// so a >= 1/(omega_{m+1}^2 - omega_m^2) and a >= 1/omega_{m_first}^2; the
/// result is the largest of these bounds divided by safety.
double choose_a(const ModeTable& table, std::size_t M, std::size_t m_first = 0, double safety = 0.9);

/// f'(omega) = sum_m sum_s theta(s omega) chi(a (omega^2 - omega_m^2)) v^s_m.
class FreqExtension {
public:
    FreqExtension() = default;
    FreqExtension(std::vector<double> omegas, std::vector<std::complex<double>> plus,
                  std::vector<std::complex<double>> minus, double a, std::size_t m_first);

    std::complex<double> operator()(double omega) const;

    double a() const noexcept { return a_; }
    std::size_t m_first() const noexcept { return m_first_; }
    std::size_t M() const noexcept { return omegas_.empty() ? 0 : omegas_.size() - 1; }
    double omega(std::size_t m) const { return omegas_.at(m); }
    /// |omega| range of the bump of mode m.
    std::pair<double, double> support(std::size_t m) const;
    const std::vector<std::complex<double>>& plus() const noexcept { return plus_; }
    const std::vector<std::complex<double>>& minus() const noexcept { return minus_; }

private:
    std::vector<double> omegas_;
    std::vector<std::complex<double>> plus_;
    std::vector<std::complex<double>> minus_;
    double a_ = 0.0;
    std::size_t m_first_ = 0;
};

/// Checks bump disjointness (throws naming the overlapping pair) and builds the extension.
/// plus/minus are indexed by m = 0..M; entries below m_first are ignored.
FreqExtension extend_to_schwartz(const std::vector<std::complex<double>>& plus,
                                 const std::vector<std::complex<double>>& minus, const ModeTable& table, double a,
                                 std::size_t m_first = 0);

enum class ZeroModePolicy { exclude, regulate };

struct HoloOptions {
    std::optional<std::size_t> M;     ///< automatic from energy_fraction when empty
    double energy_fraction = 0.999;
    std::optional<double> a;          ///< choose_a when empty
    ZeroModePolicy zero_mode = ZeroModePolicy::exclude; ///< used only when mu = 0
    double mu_reg = 0.1;
    SmearingGrid smearing;
    double t_lo = -8.0;
    double t_hi = 8.0;
    std::size_t n_t = 1601;           ///< time intervals
    std::size_t samples_per_bump = 64; ///< lower bound (>= 16); raised to avoid aliasing on the t grid
};

struct HoloMetadata {
    PhysicalParams params;
    std::size_t M = 0;
    std::size_t m_first = 0;
    double a = 0.0;
    std::string chi = bump_chi_name;
    std::string zero_mode;
    double mu_used = 0.0;
    double retained_fraction = 1.0;
    double regulator_sensitivity = 0.0;
    std::size_t samples_per_bump = 0;
    std::vector<std::string> warnings;
};

struct HoloImage {
    std::vector<double> omega;
    std::vector<std::complex<double>> fhat;
    std::vector<double> t;
    std::vector<std::complex<double>> f_prime;
    std::vector<double> envelope; ///< |positive-frequency part| + |negative-frequency part|
    FreqExtension extension;
    SmearedCoefficients coeffs;
    HoloMetadata meta;
};

HoloImage holographic_dual(const TestFunction& f, const ModeTable& table, const HoloOptions& opt = {});

/// max_m |f'(+-omega_m) d_m - f^+-_m| / max |f^+-|, with d_m taken from table.
double verify_dual(const HoloImage& image, const SmearedCoefficients& coeffs, const ModeTable& table);

struct PairingReport {
    std::complex<double> bulk;
    std::complex<double> boundary;
    double rel_diff = 0.0;
};

/// <phi(f) phi(g)> = sum_m 2 pi / (2 omega_m) f^-_m g^+_m against the boundary
/// pairing sum_m 2 pi d_m^2 / (2 omega_m) f'(-omega_m) g'(omega_m).
PairingReport pairing_check(const HoloImage& f_image, const HoloImage& g_image, const ModeTable& table);

struct Burst {
    double t = 0.0;
    double envelope = 0.0;
};

/// Local maxima of the envelope above threshold times its global maximum.
std::vector<Burst> detect_bursts(const std::vector<double>& t, const std::vector<double>& envelope,
                                 double threshold = 0.1);

/// exp(-1/(s + 1/2) - 1/(1/2 - s)) on |s| < 1/2.
double fig2_tau(double s);

struct Fig2Config {
    std::size_t M = 40;
    std::optional<double> a;
    double t_lo = -8.0;
    double t_hi = 8.0;
    std::size_t n_t = 3200;
    double threshold = 0.1;
    double tolerance = 0.2;
    std::vector<double> expected{-5.0, -3.0, -1.0, 1.0, 3.0, 5.0};
};

struct Fig2Result {
    HoloImage image;
    std::vector<Burst> bursts;
    double f00 = 0.0;
    double max_center_error = 0.0;
    bool centers_ok = false;
    bool decay_ok = false;
    std::vector<double> reference; ///< f(t, 0) on image.t
};

/// d = 1, S = c = 1, mu = 0, zero mode excluded.
Fig2Result fig2_reproduce(const Fig2Config& cfg = {});

struct HalfSpaceDual {
    std::vector<double> q;
    std::vector<double> omega;
    std::vector<std::complex<double>> fhat_plus;  ///< bulk coefficients f^+(q)
    std::vector<std::complex<double>> fhat_prime; ///< f'(omega_q), omega_q > mu
    double edge_limit_abs = 0.0;                  ///< |f'(mu+)|; the continuation below mu is 0
    std::vector<double> t;
    std::vector<std::complex<double>> f_prime;    ///< discrete inverse transform, L2 quality only
    std::vector<std::string> notes;
};

/// f'(omega) = sqrt(pi (c^2 q^2 + 1) / 2) f^{sgn omega}(q), q = sqrt(omega^2 - mu^2),
/// zero for |omega| < mu. Bulk integrals run over z in [0, z_max].
HalfSpaceDual halfspace_dual(const SpaceTimeFunction& f, double t_min, double t_max, double z_max,
                             const PhysicalParams& p, const std::vector<double>& q_grid,
                             const std::vector<double>& t_grid = {}, std::size_t n_t = 800, std::size_t n_z = 2048);

} // namespace wentzell
