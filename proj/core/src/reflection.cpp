#include "wentzell/reflection.hpp"

#include "wentzell/error.hpp"
#include "wentzell/fdtd.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wentzell {

namespace {

double gauss(double x, double eps)
{
    return std::exp(-x * x / (2.0 * eps * eps)) / (std::sqrt(2.0 * std::numbers::pi) * eps);
}

double gauss_prime(double x, double eps) { return -x / (eps * eps) * gauss(x, eps); }

// (E * G)(s) = 1/2 exp(-s/c + eps^2/(2c^2)) erfc((eps/c - s/eps)/sqrt 2), in log form.
double smoothed_decay(double s, double eps, double c)
{
    const double ef = std::erfc((eps / c - s / eps) / std::numbers::sqrt2);
    if (ef == 0.0)
        return 0.0;
    return 0.5 * std::exp(-s / c + eps * eps / (2.0 * c * c) + std::log(ef));
}

} // namespace

ReflectionValue explicit_solution(double t, double z, double eps, double c)
{
    const double phi = gauss(t + z, eps) - gauss(t - z, eps) + 2.0 / c * smoothed_decay(t - z, eps, c);
    return {phi, 2.0 / c * smoothed_decay(t, eps, c)};
}

ReflectionValue explicit_velocity(double t, double z, double eps, double c)
{
    auto d_decay = [&](double s) { return gauss(s, eps) - smoothed_decay(s, eps, c) / c; };
    const double v = gauss_prime(t + z, eps) - gauss_prime(t - z, eps) + 2.0 / c * d_decay(t - z);
    return {v, 2.0 / c * d_decay(t)};
}

ReflectionResult run_reflection(const ReflectionConfig& cfg)
{
    if (!(cfg.eps > 0.0) || !(cfg.h > 0.0) || !(cfg.t_end > cfg.t0))
        throw Error(ErrorKind::validation, "reflection run needs eps > 0, h > 0 and t_end > t0");
    const auto p = PhysicalParams::half_space(cfg.c, 0.0);
    const double L = cfg.length > 0.0 ? cfg.length : cfg.t_end - cfg.t0 + 0.5;
    const auto n = static_cast<std::size_t>(std::llround(L / cfg.h));
    const Grid1D g(0.0, static_cast<double>(n) * cfg.h, n);
    std::vector<double> pos(g.size());
    std::vector<double> vel(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        pos[i] = explicit_solution(cfg.t0, g.node(i), cfg.eps, cfg.c).phi;
        vel[i] = explicit_velocity(cfg.t0, g.node(i), cfg.eps, cfg.c).phi;
    }
    const CauchyData data(BulkBoundaryFunction(g, pos, {pos.front()}), BulkBoundaryFunction(g, vel, {vel.front()}));
    auto s = FdtdState::from_cauchy(data, p, cfg.cfl, 0.0, cfg.t0);

    ReflectionResult res;
    res.limit_at_1 = 2.0 / cfg.c * std::exp(-1.0 / cfg.c);
    const auto steps = static_cast<std::size_t>(std::llround((cfg.t_end - cfg.t0) / s.dt()));
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= steps; ++k) {
        s.advance(1);
        const double t = cfg.t0 + static_cast<double>(k) * s.dt();
        const double num = s.phi().front();
        const double ex = explicit_solution(t, 0.0, cfg.eps, cfg.c).phi_bdy;
        res.t.push_back(t);
        res.fdtd_trace.push_back(num);
        res.exact_trace.push_back(ex);
        res.sup_error = std::max(res.sup_error, std::abs(num - ex));
        if (std::abs(t - 1.0) < best) {
            best = std::abs(t - 1.0);
            res.fdtd_at_1 = num;
            res.exact_at_1 = ex;
        }
    }
    return res;
}

} // namespace wentzell
