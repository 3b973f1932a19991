#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace wentzell {

struct Strip {
    double half_width;
};

struct HalfSpace {};

using Geometry = std::variant<Strip, HalfSpace>;

/// Boundary coupling c, mass mu, geometry and boundary spacetime dimension d.
/// Construction through the factories validates; c <= 0 is rejected.
struct PhysicalParams {
    double c = 1.0;
    double mu = 0.0;
    Geometry geometry = Strip{1.0};
    int d = 1;

    static PhysicalParams strip(double c, double mu, double S, int d = 1);
    static PhysicalParams half_space(double c, double mu, int d = 1);

    void validate() const;
    bool is_strip() const noexcept { return std::holds_alternative<Strip>(geometry); }
    double S() const;
    std::size_t boundary_count() const noexcept { return is_strip() ? 2 : 1; }
};

/// Uniform grid with n intervals and n + 1 nodes, endpoints included.
class Grid1D {
public:
    Grid1D(double z_min, double z_max, std::size_t n);

    double z_min() const noexcept { return z_min_; }
    double z_max() const noexcept { return z_max_; }
    std::size_t intervals() const noexcept { return n_; }
    std::size_t size() const noexcept { return n_ + 1; }
    double h() const noexcept { return (z_max_ - z_min_) / static_cast<double>(n_); }
    double node(std::size_t i) const noexcept;
    std::vector<double> nodes() const;

    friend bool operator==(const Grid1D& a, const Grid1D& b) noexcept
    {
        return a.z_min_ == b.z_min_ && a.z_max_ == b.z_max_ && a.n_ == b.n_;
    }

private:
    double z_min_;
    double z_max_;
    std::size_t n_;
};

/// Grid spanning the strip [-S, S].
Grid1D strip_grid(const PhysicalParams& p, std::size_t n);

} // namespace wentzell
