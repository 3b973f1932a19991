#include "wentzell/params.hpp"

#include "wentzell/error.hpp"

#include <cmath>
#include <string>

namespace wentzell {

PhysicalParams PhysicalParams::strip(double c, double mu, double S, int d)
{
    PhysicalParams p{c, mu, Strip{S}, d};
    p.validate();
    return p;
}

PhysicalParams PhysicalParams::half_space(double c, double mu, int d)
{
    PhysicalParams p{c, mu, HalfSpace{}, d};
    p.validate();
    return p;
}

void PhysicalParams::validate() const
{
    if (!std::isfinite(c) || c <= 0.0)
        throw Error(ErrorKind::validation,
                    "boundary coupling c must be strictly positive (got " + std::to_string(c) +
                        "); negative c is rejected, the boundary energy would be indefinite");
    if (!std::isfinite(mu) || mu < 0.0)
        throw Error(ErrorKind::validation, "mass mu must be non-negative (got " + std::to_string(mu) + ")");
    if (d < 1)
        throw Error(ErrorKind::validation, "dimension d must be >= 1 (got " + std::to_string(d) + ")");
    if (const auto* s = std::get_if<Strip>(&geometry)) {
        if (!std::isfinite(s->half_width) || s->half_width <= 0.0)
            throw Error(ErrorKind::validation,
                        "strip half-width S must be strictly positive (got " + std::to_string(s->half_width) + ")");
    }
}

double PhysicalParams::S() const
{
    if (const auto* s = std::get_if<Strip>(&geometry))
        return s->half_width;
    throw Error(ErrorKind::domain, "half-width requested for half-space geometry");
}

Grid1D::Grid1D(double z_min, double z_max, std::size_t n)
    : z_min_(z_min), z_max_(z_max), n_(n)
{
    if (n < 2)
        throw Error(ErrorKind::validation, "grid needs at least 2 intervals");
    if (!(z_max > z_min) || !std::isfinite(z_min) || !std::isfinite(z_max))
        throw Error(ErrorKind::validation, "grid endpoints must be finite with z_max > z_min");
}

double Grid1D::node(std::size_t i) const noexcept
{
    if (i == n_)
        return z_max_;
    return z_min_ + (z_max_ - z_min_) * static_cast<double>(i) / static_cast<double>(n_);
}

std::vector<double> Grid1D::nodes() const
{
    std::vector<double> z(size());
    for (std::size_t i = 0; i < z.size(); ++i)
        z[i] = node(i);
    return z;
}

Grid1D strip_grid(const PhysicalParams& p, std::size_t n)
{
    const double S = p.S();
    return Grid1D(-S, S, n);
}

} // namespace wentzell
