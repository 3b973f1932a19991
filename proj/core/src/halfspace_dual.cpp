#include "wentzell/error.hpp"
#include "wentzell/holo.hpp"

#include <cmath>
#include <numbers>

namespace wentzell {

HalfSpaceDual halfspace_dual(const SpaceTimeFunction& f, double t_min, double t_max, double z_max,
                             const PhysicalParams& p, const std::vector<double>& q_grid,
                             const std::vector<double>& t_grid, std::size_t n_t, std::size_t n_z)
{
    p.validate();
    if (p.is_strip())
        throw Error(ErrorKind::validation, "halfspace_dual needs the half-space geometry");
    if (!(p.mu > 0.0))
        throw Error(ErrorKind::validation, "halfspace_dual needs mu > 0");
    if (!(t_max > t_min) || !(z_max > 0.0))
        throw Error(ErrorKind::validation, "invalid support for the half-space test function");
    for (std::size_t i = 0; i < q_grid.size(); ++i)
        if (!(q_grid[i] >= 0.0) || (i > 0 && !(q_grid[i] > q_grid[i - 1])))
            throw Error(ErrorKind::validation, "q grid must be non-negative and strictly increasing");

    const double pi = std::numbers::pi;
    const Grid1D tg(t_min, t_max, n_t);
    const Grid1D zg(0.0, z_max, n_z);
    const auto wt = quadrature_weights(tg, Quadrature::trapezoid);
    const auto wz = quadrature_weights(zg, Quadrature::corrected_trapezoid);
    const auto ts = tg.nodes();
    const auto zs = zg.nodes();
    std::vector<double> F(ts.size() * zs.size());
    for (std::size_t k = 0; k < ts.size(); ++k)
        for (std::size_t i = 0; i < zs.size(); ++i)
            F[k * zs.size() + i] = wz[i] * f(ts[k], zs[i]);

    HalfSpaceDual out;
    const double norm = 1.0 / std::sqrt(2.0 * pi);
    std::vector<double> prof(zs.size());
    std::vector<std::complex<double>> fminus;
    for (double q : q_grid) {
        for (std::size_t i = 0; i < zs.size(); ++i)
            prof[i] = eval_halfspace_mode(q, zs[i], p);
        const double w = std::sqrt(q * q + p.mu * p.mu);
        std::complex<double> plus = 0.0;
        for (std::size_t k = 0; k < ts.size(); ++k) {
            double acc = 0.0;
            const double* row = &F[k * zs.size()];
            for (std::size_t i = 0; i < zs.size(); ++i)
                acc += prof[i] * row[i];
            plus += norm * wt[k] * acc * std::exp(std::complex<double>(0.0, w * ts[k]));
        }
        const double cq = p.c * q;
        const double factor = std::sqrt(pi * (cq * cq + 1.0) / 2.0);
        out.q.push_back(q);
        out.omega.push_back(w);
        out.fhat_plus.push_back(plus);
        out.fhat_prime.push_back(factor * plus);
        fminus.push_back(std::conj(plus));
    }
    if (!q_grid.empty() && q_grid.front() == 0.0)
        out.edge_limit_abs = std::abs(out.fhat_prime.front());
    out.notes.push_back("f'(omega) vanishes for |omega| < mu and jumps at the mass shell edge; "
                        "it is not smooth there, so f' is square integrable but not Schwartz");

    if (!t_grid.empty() && q_grid.size() >= 2) {
        out.t = t_grid;
        out.f_prime.assign(t_grid.size(), 0.0);
        for (std::size_t j = 0; j < q_grid.size(); ++j) {
            double dq = 0.0;
            if (j > 0)
                dq += 0.5 * (q_grid[j] - q_grid[j - 1]);
            if (j + 1 < q_grid.size())
                dq += 0.5 * (q_grid[j + 1] - q_grid[j]);
            const double jac = q_grid[j] / out.omega[j] * dq;
            const double cq = p.c * q_grid[j];
            const double factor = std::sqrt(pi * (cq * cq + 1.0) / 2.0);
            for (std::size_t k = 0; k < t_grid.size(); ++k) {
                const auto e = std::exp(std::complex<double>(0.0, -out.omega[j] * t_grid[k]));
                out.f_prime[k] += norm * jac * (out.fhat_prime[j] * e + factor * fminus[j] * std::conj(e));
            }
        }
        out.notes.push_back("f'(t) is a discrete inverse transform on the supplied q grid (L2 quality only)");
    }
    return out;
}

} // namespace wentzell
