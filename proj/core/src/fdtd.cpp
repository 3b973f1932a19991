#include "wentzell/fdtd.hpp"

#include "wentzell/error.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <string>

namespace wentzell {

FdtdState::FdtdState(Grid1D grid, PhysicalParams p, double dt, double k)
    : grid_(grid), p_(p), dt_(dt), k_(k)
{
}

FdtdState FdtdState::from_cauchy(const CauchyData& data, const PhysicalParams& p, double cfl, double k, double t0)
{
    p.validate();
    if (!(cfl > 0.0 && cfl <= 1.0))
        throw Error(ErrorKind::validation, "CFL factor must lie in (0, 1], got " + std::to_string(cfl));
    const Grid1D& g = data.position.grid;
    if (data.position.boundary.size() != p.boundary_count())
        throw Error(ErrorKind::grid_mismatch, "boundary component count does not match geometry");
    if (p.is_strip() && (g.z_min() != -p.S() || g.z_max() != p.S()))
        throw Error(ErrorKind::grid_mismatch, "strip FDTD grid must span exactly [-S, S]");
    if (!p.is_strip() && g.z_min() != 0.0)
        throw Error(ErrorKind::grid_mismatch, "half-space FDTD grid must start at z = 0");
    if (g.size() < 4)
        throw Error(ErrorKind::validation, "FDTD grid needs at least 3 intervals");

    const double h = g.h();
    const double dt = cfl * h;
    const double m2 = p.mu * p.mu + k * k;
    if (dt * dt * (4.0 / (h * h) + m2) > 4.0)
        throw Error(ErrorKind::validation, "time step violates the leapfrog stability limit for this mass");

    FdtdState s(g, p, dt, k);
    s.t_ = t0;
    s.phi_ = data.position.bulk;
    std::vector<double> vel = data.velocity.bulk;
    s.phi_.front() = data.position.boundary.front();
    vel.front() = data.velocity.boundary.front();
    if (p.is_strip()) {
        s.phi_.back() = data.position.boundary.back();
        vel.back() = data.velocity.boundary.back();
    } else {
        s.phi_.back() = 0.0;
        vel.back() = 0.0;
    }
    std::vector<double> acc(g.size());
    s.acceleration(s.phi_, acc);
    s.phi_prev_.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        s.phi_prev_[i] = s.phi_[i] - dt * vel[i] + 0.5 * dt * dt * acc[i];
    if (!p.is_strip())
        s.phi_prev_.back() = 0.0;
    return s;
}

void FdtdState::acceleration(const std::vector<double>& u, std::vector<double>& out) const
{
    const std::size_t n = u.size();
    const double h = grid_.h();
    const double ih2 = 1.0 / (h * h);
    const double m2 = p_.mu * p_.mu + k_ * k_;
    const double coupling = 1.0 / (2.0 * h * p_.c);
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) * ih2 - m2 * u[i];
    out[0] = -m2 * u[0] + coupling * (-3.0 * u[0] + 4.0 * u[1] - u[2]);
    if (p_.is_strip())
        out[n - 1] = -m2 * u[n - 1] + coupling * (-3.0 * u[n - 1] + 4.0 * u[n - 2] - u[n - 3]);
    else
        out[n - 1] = 0.0;
}

std::vector<double> FdtdState::boundary() const
{
    if (p_.is_strip())
        return {phi_.front(), phi_.back()};
    return {phi_.front()};
}

std::vector<double> FdtdState::peek_next() const
{
    std::vector<double> next(phi_.size());
    scratch_.resize(phi_.size());
    acceleration(phi_, scratch_);
    const double dt2 = dt_ * dt_;
    for (std::size_t i = 0; i < phi_.size(); ++i)
        next[i] = 2.0 * phi_[i] - phi_prev_[i] + dt2 * scratch_[i];
    if (!p_.is_strip())
        next.back() = 0.0;
    return next;
}

void FdtdState::advance(std::size_t n)
{
    const double dt2 = dt_ * dt_;
    scratch_.resize(phi_.size());
    for (std::size_t s = 0; s < n; ++s) {
        acceleration(phi_, scratch_);
        for (std::size_t i = 0; i < phi_.size(); ++i)
            phi_prev_[i] = 2.0 * phi_[i] - phi_prev_[i] + dt2 * scratch_[i];
        if (!p_.is_strip())
            phi_prev_.back() = 0.0;
        std::swap(phi_, phi_prev_);
        ++steps_;
    }
    t_ += static_cast<double>(n) * dt_;
}

CauchyData FdtdState::cauchy() const
{
    const auto next = peek_next();
    std::vector<double> vel(phi_.size());
    for (std::size_t i = 0; i < vel.size(); ++i)
        vel[i] = (next[i] - phi_prev_[i]) / (2.0 * dt_);
    const std::size_t nb = p_.boundary_count();
    std::vector<double> bpos{phi_.front()};
    std::vector<double> bvel{vel.front()};
    if (nb == 2) {
        bpos.push_back(phi_.back());
        bvel.push_back(vel.back());
    }
    return CauchyData(BulkBoundaryFunction(grid_, phi_, bpos), BulkBoundaryFunction(grid_, vel, bvel));
}

FdtdState fdtd_step(const FdtdState& s)
{
    FdtdState out = s;
    out.advance(1);
    return out;
}

namespace {

std::vector<double> gradient(const std::vector<double>& u, double h)
{
    const std::size_t n = u.size();
    std::vector<double> g(n);
    for (std::size_t i = 1; i + 1 < n; ++i)
        g[i] = (u[i + 1] - u[i - 1]) / (2.0 * h);
    g[0] = (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h);
    g[n - 1] = (3.0 * u[n - 1] - 4.0 * u[n - 2] + u[n - 3]) / (2.0 * h);
    return g;
}

EnergyReport energy_weighted(const FdtdState& s, const std::vector<double>& w, bool left, bool right)
{
    const auto next = s.peek_next();
    const auto& cur = s.phi();
    const auto& prev = s.phi_prev();
    const double h = s.grid().h();
    const double dt = s.dt();
    const double m2 = s.params().mu * s.params().mu + s.k() * s.k();
    const auto dz = gradient(cur, h);
    double bulk = 0.0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
        if (w[i] == 0.0)
            continue;
        const double v = (next[i] - prev[i]) / (2.0 * dt);
        bulk += 0.5 * w[i] * (v * v + dz[i] * dz[i] + m2 * cur[i] * cur[i]);
    }
    double bdy = 0.0;
    auto add = [&](std::size_t i) {
        const double v = (next[i] - prev[i]) / (2.0 * dt);
        bdy += 0.5 * s.params().c * (v * v + m2 * cur[i] * cur[i]);
    };
    if (left)
        add(0);
    if (right && s.params().is_strip())
        add(cur.size() - 1);
    return {bulk, bdy, bulk + bdy};
}

} // namespace

EnergyReport energy(const FdtdState& s)
{
    return energy_weighted(s, quadrature_weights(s.grid(), Quadrature::corrected_trapezoid), true, true);
}

EnergyReport energy_on(const FdtdState& s, double z_lo, double z_hi)
{
    const auto& g = s.grid();
    const double h = g.h();
    const double tol = 1e-12 * h;
    std::vector<double> w(g.size(), 0.0);
    std::size_t first = g.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double z = g.node(i);
        if (z >= z_lo - tol && z <= z_hi + tol) {
            w[i] = h;
            first = std::min(first, i);
            last = std::max(last, i);
        }
    }
    if (first > last)
        return {};
    w[first] *= 0.5;
    w[last] *= 0.5;
    if (first == last)
        w[first] = 0.0;
    return energy_weighted(s, w, first == 0, last == g.size() - 1);
}

CausalityReport causality_probe(const CauchyData& data, const PhysicalParams& p, double z0, double r, double t,
                                double tol, double cfl)
{
    auto s = FdtdState::from_cauchy(data, p, cfl);
    const auto& g = s.grid();
    const std::size_t n = g.size();
    std::size_t lo = n;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (data.position.bulk[i] != 0.0 || data.velocity.bulk[i] != 0.0) {
            lo = std::min(lo, i);
            hi = std::max(hi, i);
        }
    }
    CausalityReport rep;
    const std::size_t steps = static_cast<std::size_t>(std::llround(t / s.dt()));
    rep.steps = steps;
    if (lo > hi) {
        rep.t = t;
        return rep;
    }
    const double zmin = g.z_min();
    const double zmax = p.is_strip() ? g.z_max() : std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= steps; ++k) {
        s.advance(1);
        const double tk = s.t();
        const std::size_t spread = k + 1;
        const std::size_t clo = lo > spread ? lo - spread : 0;
        const std::size_t chi = std::min(n - 1, hi + spread);
        const auto& u = s.phi();
        for (std::size_t i = 0; i < n; ++i) {
            const double a = std::abs(u[i]);
            if (i < clo || i > chi)
                rep.discrete_leak = std::max(rep.discrete_leak, a);
            if (std::abs(g.node(i) - z0) > r + tk + 1e-12)
                rep.physical_leak = std::max(rep.physical_leak, a);
        }
        if (z0 - r - tk <= zmin || z0 + r + tk >= zmax)
            rep.boundary_reached = true;
    }
    rep.t = s.t();
    rep.pass = rep.discrete_leak < tol;
    return rep;
}

DependenceReport domain_of_dependence_energy(const CauchyData& data, const PhysicalParams& p, double s_lo,
                                             double s_hi, double t_end, double cfl)
{
    auto s = FdtdState::from_cauchy(data, p, cfl);
    const auto& g = s.grid();
    const double h = g.h();
    const bool lo_on_boundary = std::abs(s_lo - g.z_min()) <= 1e-12 * h;
    const bool hi_on_boundary = p.is_strip() && std::abs(s_hi - g.z_max()) <= 1e-12 * h;
    DependenceReport rep;
    rep.initial_region_energy = energy_on(s, s_lo, s_hi).total;
    rep.total_energy = energy(s).total;
    const std::size_t steps = static_cast<std::size_t>(std::llround(t_end / s.dt()));
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * s.dt();
        const double lo = lo_on_boundary ? s_lo : s_lo + t;
        const double hi = hi_on_boundary ? s_hi : s_hi - t;
        if (lo > hi)
            break;
        rep.max_dependence_energy = std::max(rep.max_dependence_energy, energy_on(s, lo, hi).total);
        rep.t_end = t;
        if (k < steps)
            s.advance(1);
    }
    return rep;
}

} // namespace wentzell
