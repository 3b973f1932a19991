#include "wentzell/error.hpp"
#include "wentzell/modes.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wentzell;

TEST_CASE("unit strip spectrum")
{
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    const auto t = build_table(9, p);
    CHECK(t[0].q == 0.0);
    CHECK(t[0].d_bdy == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(t[1].q == doctest::Approx(0.8603335890193798).epsilon(1e-12));
    CHECK(t[2].q == doctest::Approx(2.0287578381104342).epsilon(1e-12));
    CHECK(t[1].parity == Parity::odd);
    CHECK(t[2].parity == Parity::even);
    CHECK(t[1].c_norm == doctest::Approx(0.79691).epsilon(5e-4 / 0.79691));
    CHECK(t[1].d_bdy == doctest::Approx(0.6041029).epsilon(1e-6));
    CHECK(t[9].q == doctest::Approx(12.645287).epsilon(1e-6));
    CHECK(std::abs(t[9].d_bdy) == doctest::Approx(0.0785909).epsilon(1e-5));
    CHECK(std::abs(std::abs(t[9].d_bdy) - 0.0796) / 0.0796 < 0.15);
    CHECK(t[1].boundary_value(Side::minus) == doctest::Approx(-t[1].d_bdy));
    CHECK(t[2].boundary_value(Side::minus) == doctest::Approx(t[2].d_bdy));
}

TEST_CASE("normalization constant from an independent quadrature")
{
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    const auto t = build_table(3, p);
    for (int m = 1; m <= 3; ++m) {
        const double q = t[m].q;
        auto raw = [&](double z) { return m % 2 ? std::sin(q * z) : std::cos(q * z); };
        const double bulk = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [&](double z) { return raw(z) * raw(z); }, -1.0, 1.0, 10, 1e-14);
        const double norm2 = bulk + 2.0 * raw(1.0) * raw(1.0);
        CHECK(t[m].c_norm == doctest::Approx(1.0 / std::sqrt(norm2)).epsilon(1e-12));
    }
}

TEST_CASE("brackets isolate one root")
{
    for (double S : {0.5, 1.0, 2.0}) {
        for (double c : {0.5, 1.0, 2.0}) {
            const auto p = PhysicalParams::strip(c, 0.0, S);
            for (int m = 1; m <= 60; ++m) {
                const auto [lo, hi] = q_bracket(m, S);
                CHECK(lo < hi);
                const double rl = eigen_residual(m, lo * (1 + 1e-12) + 1e-15, p);
                const double rh = eigen_residual(m, hi * (1 - 1e-12), p);
                CHECK(rl * rh < 0.0);
                int changes = 0;
                double prev = rl;
                for (int i = 1; i <= 200; ++i) {
                    const double r = eigen_residual(m, lo + (hi - lo) * i / 201.0, p);
                    if (r * prev < 0.0)
                        ++changes;
                    prev = r;
                }
                if (rh * prev < 0.0)
                    ++changes;
                CHECK(changes == 1);
                const double q = solve_q(m, p);
                CHECK(q > lo);
                CHECK(q < hi);
                CHECK(std::abs(eigen_residual(m, q, p)) < 1e-12);
            }
        }
    }
}

TEST_CASE("asymptotic verification")
{
    const auto t = build_table(200, PhysicalParams::strip(1.0, 0.0, 1.0));
    const auto r = verify_table(t);
    CHECK(r.all_pass());
    CHECK(r.rows.at(0).skipped);
    CHECK(r.rows.at(1).skipped);
    CHECK(r.max_residual < 1e-12);
    CHECK(r.cm_constant <= 2.0 * r.cm_reference);
    for (double S : {0.5, 2.0})
        CHECK(verify_table(build_table(200, PhysicalParams::strip(0.7, 0.0, S))).all_pass());
}

TEST_CASE("completeness of boundary weights")
{
    const double c = 1.0;
    const auto t = build_table(4000, PhysicalParams::strip(c, 0.0, 1.0));
    double s = 0.0;
    for (const auto& e : t.entries())
        s += e.d_bdy * e.d_bdy;
    CHECK(std::abs(s - 1.0 / c) < 2e-4);
}

TEST_CASE("table validation")
{
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    auto entries = build_table(3, p).entries();
    std::swap(entries[1], entries[2]);
    CHECK_THROWS_AS(ModeTable(p, entries, 1e-12), Error);
    CHECK_THROWS_AS(build_table(3, PhysicalParams::half_space(1.0, 0.0)), Error);
    const auto t = build_table(3, p);
    const auto t2 = t.with_mu(2.0);
    CHECK(t2[2].q == t[2].q);
    CHECK(t2.omega(0) == doctest::Approx(2.0));
}

TEST_CASE("mode evaluation")
{
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    const auto t = build_table(5, p);
    for (int m = 0; m <= 5; ++m) {
        CHECK(eval_mode(t[m], 1.0, p) == doctest::Approx(t[m].d_bdy).epsilon(1e-13));
        CHECK(eval_mode(t[m], -1.0, p) == doctest::Approx(t[m].boundary_value(Side::minus)).epsilon(1e-13));
        const double q2 = t[m].q * t[m].q;
        CHECK(eval_mode_derivative(t[m], 1.0, p) ==
              doctest::Approx(p.c * q2 * t[m].d_bdy).epsilon(1e-12));
        const double h = 1e-6;
        const double fd = (eval_mode(t[m], 0.3 + h, p) - eval_mode(t[m], 0.3 - h, p)) / (2 * h);
        CHECK(eval_mode_derivative(t[m], 0.3, p) == doctest::Approx(fd).epsilon(1e-7));
    }
    const auto hs = PhysicalParams::half_space(1.0, 0.0);
    CHECK(eval_halfspace_mode(0.0, 0.0, hs) == doctest::Approx(std::sqrt(2.0 / std::numbers::pi)));
}

TEST_CASE("projection and synthesis")
{
    const auto p = PhysicalParams::strip(1.0, 0.5, 1.0);
    const auto t = build_table(30, p);
    const Grid1D g = strip_grid(p, 4095);

    const auto M2 = mode_function(t[2], g, p);
    const auto a = project(M2, t);
    for (std::size_t m = 0; m < a.size(); ++m)
        CHECK(std::abs(a[m] - (m == 2 ? 1.0 : 0.0)) < 1e-8);

    const auto z = project(BulkBoundaryFunction::zeros(g, 2), t);
    for (double v : z)
        CHECK(v == 0.0);

    std::vector<double> coeffs(31, 0.0);
    for (std::size_t m = 0; m <= 12; ++m)
        coeffs[m] = 1.0 / (1.0 + m * m);
    const auto F = synthesize(coeffs, t, g);
    CHECK(compatibility_check(F, 0.0));
    const auto back = project(F, t);
    for (std::size_t m = 0; m < coeffs.size(); ++m)
        CHECK(std::abs(back[m] - coeffs[m]) < 1e-8);
    const auto F2 = synthesize(back, t, g);
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(std::abs(F2.bulk[i] - F.bulk[i]) < 1e-7);
}
