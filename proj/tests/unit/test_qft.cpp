#include "wentzell/error.hpp"
#include "wentzell/modes.hpp"
#include "wentzell/smearing.hpp"
#include "wentzell/twopoint.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wentzell;

namespace {

double bump(double t, double w)
{
    const double u = t / w;
    return std::abs(u) < 1.0 ? std::exp(-1.0 / (1.0 - u * u)) : 0.0;
}

} // namespace

TEST_CASE("strip two-point function, single mode")
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    const auto t = build_table(200, p);
    TwoPointSpec one;
    one.M = 1;
    one.m_first = 1;
    const auto v = boundary_2pt_strip(0.0, 0.0, t, one);
    const double mu1 = t.omega(1);
    CHECK(v.value.real() == doctest::Approx(t[1].d_bdy * t[1].d_bdy / (2.0 * mu1)).epsilon(1e-14));
    CHECK(v.value.imag() == 0.0);
}

TEST_CASE("strip two-point function, cutoff and symmetry")
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    const auto t = build_table(400, p);
    TwoPointSpec s100;
    TwoPointSpec s200;
    s200.M = 200;
    const auto a = boundary_2pt_strip(0.0, 0.0, t, s100);
    const auto b = boundary_2pt_strip(0.0, 0.0, t, s200);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound);
    CHECK(std::abs(a.value.imag()) < 1e-15);
    for (double x0 : {0.3, 1.1, 4.0}) {
        const auto f = boundary_2pt_strip(x0, 0.0, t, s100).value;
        const auto r = boundary_2pt_strip(-x0, 0.0, t, s100).value;
        CHECK(std::abs(f - std::conj(r)) < 1e-14);
    }
    CHECK(strip_tail_bound(200, p) < strip_tail_bound(100, p));
    TwoPointSpec massless;
    CHECK_THROWS_AS(boundary_2pt_strip(0.0, 0.0, t.with_mu(0.0), massless), Error);
}

TEST_CASE("half-space two-point function")
{
    const auto n = halfspace_weight_normalization(1.0);
    CHECK(n.value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(halfspace_weight_normalization(2.0).value == doctest::Approx(0.5).epsilon(1e-8));

    const auto p = PhysicalParams::half_space(1.0, 1.0);
    HalfSpaceSpec lo;
    lo.q_max = 2000.0;
    HalfSpaceSpec hi;
    hi.q_max = 4000.0;
    const auto a = boundary_2pt_halfspace(0.5, 0.0, p, lo);
    const auto b = boundary_2pt_halfspace(0.5, 0.0, p, hi);
    CHECK(std::abs(a.value - b.value) < 2.0 * (2.0 / (std::numbers::pi * 2000.0 * 2000.0)) + 1e-10);
    const auto z = boundary_2pt_halfspace(0.0, 0.0, p, hi);
    CHECK(std::abs(z.value.imag()) < 1e-14);
    CHECK(z.value.real() > 0.0);
}

TEST_CASE("spacelike Bessel kernel")
{
    for (double r : {0.5, 1.0, 3.0}) {
        const double mass = 1.3;
        const double k0 = boost::math::quadrature::exp_sinh<double>().integrate(
            [&](double u) { return std::exp(-mass * r * std::cosh(u)); }, 0.0, std::numeric_limits<double>::infinity());
        CHECK(free_spacelike_2pt(mass, r, 2) == doctest::Approx(k0 / (2.0 * std::numbers::pi)).epsilon(1e-10));
        CHECK(free_spacelike_2pt(mass, r, 3) ==
              doctest::Approx(std::exp(-mass * r) / (4.0 * std::numbers::pi * r)).epsilon(1e-12));
    }

    const auto t = build_table(300, PhysicalParams::strip(1.0, 1.0, 1.0));
    TwoPointSpec s;
    s.d = 2;
    s.M = 1;
    s.m_first = 1;
    const double single = spacelike_2pt_bessel(1.0, t, s).value;
    CHECK(single == doctest::Approx(t[1].d_bdy * t[1].d_bdy * free_spacelike_2pt(t.omega(1), 1.0, 2)));

    s.m_first = 0;
    s.M = 100;
    double prev = std::numeric_limits<double>::infinity();
    for (double r : {0.2, 0.4, 0.8, 1.6, 3.2}) {
        const double v = spacelike_2pt_bessel(r * r, t, s).value;
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
    TwoPointSpec s150 = s;
    s150.M = 150;
    const double v100 = spacelike_2pt_bessel(4.0, t, s).value;
    const double v150 = spacelike_2pt_bessel(4.0, t, s150).value;
    CHECK(std::abs(v150 - v100) < std::exp(-100.0));
    CHECK_THROWS_AS(spacelike_2pt_bessel(-1.0, t, s), Error);
}

TEST_CASE("boundary commutator")
{
    const auto t = build_table(100, PhysicalParams::strip(1.0, 1.0, 1.0));
    TwoPointSpec s;
    s.d = 2;
    CHECK(commutator_boundary(0.5, 1.0, t, s) == std::complex<double>(0.0, 0.0));
    CHECK(commutator_boundary(0.0, 0.3, t, s) == std::complex<double>(0.0, 0.0));
    const auto f = commutator_boundary(2.0, 0.5, t, s);
    const auto b = commutator_boundary(-2.0, 0.5, t, s);
    CHECK(std::abs(f) > 0.0);
    CHECK(std::abs(f + b) < 1e-15);

    TwoPointSpec one = s;
    one.m_first = 1;
    one.M = 1;
    const double x0 = 1.7;
    const auto c1 = commutator_boundary(x0, 0.0, t, one);
    CHECK(c1.imag() ==
          doctest::Approx(-0.5 * t[1].d_bdy * t[1].d_bdy * boost::math::cyl_bessel_j(0, t.omega(1) * x0)));

    std::vector<SpacetimePoint> pts;
    for (int i = 0; i < 20; ++i)
        pts.push_back({0.1 * i, 0.1 * i + 0.05});
    const auto cc = causality_check(pts, t, s);
    CHECK(cc.pass);
    CHECK(cc.spacelike_points == 20);
    TwoPointSpec d1;
    CHECK_THROWS_AS(commutator_boundary(1.0, 0.0, t, d1), Error);
}

TEST_CASE("tail convergence")
{
    const auto t = build_table(4000, PhysicalParams::strip(1.0, 0.0, 1.0));
    const auto r = tail_convergence(t, 1000);
    CHECK(r.pass);
    CHECK_FALSE(r.divergent);
    CHECK(r.ratio == doctest::Approx(1.0).epsilon(0.05));
    const auto r2 = tail_convergence(t, 2000);
    CHECK(std::abs(r2.partial_sum - r.partial_sum) < 5e-4);

    const auto t2 = build_table(2000, PhysicalParams::strip(1.0, 0.0, 2.0));
    const auto r3 = tail_convergence(t2, 1000);
    CHECK(r3.ratio == doctest::Approx(1.0).epsilon(0.05));

    const std::vector<double> neumann(2001, 0.5);
    const auto n = tail_convergence(neumann, 1000);
    CHECK(n.divergent);
    CHECK_FALSE(n.pass);
    CHECK_THROWS_AS(tail_convergence(t, 3000), Error);
}

TEST_CASE("smeared coefficients")
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    const auto t = build_table(20, p);
    TestFunction f;
    f.t_min = -1.0;
    f.t_max = 1.0;
    f.bulk = [](double tt, double z) { return bump(tt, 1.0) * std::exp(-4.0 * z * z); };
    const SmearingGrid grid{-1.0, 1.0, 801, 512};
    const auto c = smeared_coeffs(f, t, grid);
    CHECK(c.size() == 21);
    for (std::size_t m = 0; m < c.size(); ++m)
        CHECK(std::abs(c.minus[m] - std::conj(c.plus[m])) < 1e-14);
    CHECK(c.energy() > 0.0);

    TestFunction zero;
    zero.bulk = [](double, double) { return 0.0; };
    const auto z = smeared_coeffs(zero, t, grid);
    for (std::size_t m = 0; m < z.size(); ++m)
        CHECK(std::abs(z.plus[m]) == 0.0);

    SmearingGrid short_grid{-0.5, 1.0, 400, 256};
    CHECK_THROWS_AS(smeared_coeffs(f, t, short_grid), Error);
}

TEST_CASE("boundary Gaussian peaks at its matching frequency")
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    const auto t = build_table(10, p);
    const double w1 = t.omega(1);
    const double sigma = 2.0;
    auto g = [&](double tt) { return std::exp(-tt * tt / (2 * sigma * sigma)) * std::cos(w1 * tt); };
    const auto f = boundary_smearing(g, Side::plus, p.c, -20.0, 20.0);
    const auto c = smeared_coeffs(f, t, {-20.0, 20.0, 8000, 64});
    std::size_t best = 0;
    for (std::size_t m = 0; m < c.size(); ++m)
        if (std::abs(c.plus[m] / t[m].d_bdy) > std::abs(c.plus[best] / t[best].d_bdy))
            best = m;
    CHECK(best == 1);
}

TEST_CASE("boundary field equals the trace of the bulk field")
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    const auto t = build_table(10, p);
    auto g = [](double tt) { return bump(tt, 1.0); };
    const SmearingGrid grid{-1.0, 1.0, 2000, 64};
    for (Side side : {Side::minus, Side::plus}) {
        const auto bdy = smeared_coeffs(boundary_smearing(g, side, p.c, -1.0, 1.0), t, grid);
        TestFunction point;
        point.t_min = -1.0;
        point.t_max = 1.0;
        point.sources.push_back({side == Side::plus ? 1.0 : -1.0, PointSource::Kind::value, g});
        const auto via_trace = smeared_coeffs(point, t, grid);
        for (std::size_t m = 0; m < bdy.size(); ++m)
            CHECK(std::abs(bdy.plus[m] - via_trace.plus[m]) < 1e-12);
    }
}

TEST_CASE("source relation")
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    const auto t = build_table(20, p);
    auto g = [](double tt) { return std::exp(-1.0 / (1.0 - tt * tt)) * (std::abs(tt) < 1.0); };
    auto g_dd = [](double tt) {
        if (std::abs(tt) >= 1.0)
            return 0.0;
        const double u = 1.0 - tt * tt;
        const double e = std::exp(-1.0 / u);
        return e * (6.0 * tt * tt * tt * tt - 2.0) / (u * u * u * u);
    };
    const SmearingGrid grid{-1.0, 1.0, 4000, 64};
    for (Side side : {Side::minus, Side::plus}) {
        const auto r = source_relation_check(g, g_dd, -1.0, 1.0, t, 20, side, grid);
        CHECK(r.pass);
        CHECK(r.max_residual < 1e-8);
    }
    const auto zero = source_relation_check([](double) { return 0.0; }, [](double) { return 0.0; }, -1.0, 1.0, t, 20,
                                            Side::plus, grid);
    for (const auto& v : zero.lhs)
        CHECK(std::abs(v) == 0.0);
    const auto neumann = source_relation_check(g, g_dd, -1.0, 1.0, t, 20, Side::plus, grid,
                                               std::vector<double>(21, 1.0 / std::sqrt(2.0)));
    CHECK_FALSE(neumann.pass);
}
