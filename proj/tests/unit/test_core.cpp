#include "wentzell/error.hpp"
#include "wentzell/function_space.hpp"
#include "wentzell/modes.hpp"
#include "wentzell/sobolev.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace wentzell;

namespace {

BulkBoundaryFunction sample(const Grid1D& g, double (*f)(double), std::vector<double> bdy)
{
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        v[i] = f(g.node(i));
    return BulkBoundaryFunction(g, v, std::move(bdy));
}

double one(double) { return 1.0; }
double zero(double) { return 0.0; }
double sine(double z) { return std::sin(std::numbers::pi * z); }

} // namespace

TEST_CASE("parameter validation")
{
    CHECK_NOTHROW(PhysicalParams::strip(1.0, 0.0, 1.0));
    CHECK_THROWS_AS(PhysicalParams::strip(-1.0, 0.0, 1.0), Error);
    CHECK_THROWS_AS(PhysicalParams::strip(0.0, 0.0, 1.0), Error);
    CHECK_THROWS_AS(PhysicalParams::strip(1.0, -0.1, 1.0), Error);
    CHECK_THROWS_AS(PhysicalParams::strip(1.0, 0.0, 0.0), Error);
    CHECK_THROWS_AS(PhysicalParams::half_space(1.0, 0.0, 0), Error);
    try {
        PhysicalParams::strip(-1.0, 0.0, 1.0);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::validation);
        CHECK(std::string(e.what()).find("negative c") != std::string::npos);
    }
    CHECK_THROWS_AS(PhysicalParams::half_space(1.0, 1.0).S(), Error);
    CHECK(PhysicalParams::half_space(1.0, 1.0).boundary_count() == 1);
}

TEST_CASE("grid")
{
    CHECK_THROWS_AS(Grid1D(0.0, 1.0, 1), Error);
    CHECK_THROWS_AS(Grid1D(1.0, 0.0, 4), Error);
    const Grid1D g(-1.0, 1.0, 8);
    CHECK(g.size() == 9);
    CHECK(g.h() == doctest::Approx(0.25));
    CHECK(g.node(0) == -1.0);
    CHECK(g.node(8) == 1.0);
    for (auto rule : {Quadrature::trapezoid, Quadrature::corrected_trapezoid}) {
        const auto w = quadrature_weights(Grid1D(-1.0, 1.0, 64), rule);
        double s = 0.0;
        for (double x : w)
            s += x;
        CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("corrected trapezoid is fourth order")
{
    const Grid1D g1(0.0, 1.0, 32);
    const Grid1D g2(0.0, 1.0, 64);
    auto err = [](const Grid1D& g) {
        const auto w = quadrature_weights(g, Quadrature::corrected_trapezoid);
        double s = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            s += w[i] * std::exp(g.node(i));
        return std::abs(s - (std::exp(1.0) - 1.0));
    };
    CHECK(err(g1) / err(g2) > 14.0);
}

TEST_CASE("weighted inner product")
{
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    const Grid1D g(-1.0, 1.0, 200);
    const auto F = sample(g, one, {1.0, 1.0});
    CHECK(weighted_inner_product(F, F, p).real() == doctest::Approx(4.0).epsilon(1e-14));
    const auto S = sample(g, sine, {0.0, 0.0});
    CHECK(std::abs(weighted_inner_product(S, F, p)) < 1e-14);

    const Grid1D other(-1.0, 1.0, 100);
    const auto G = sample(other, one, {1.0, 1.0});
    CHECK_THROWS_AS(weighted_inner_product(F, G, p), Error);
    try {
        weighted_inner_product(F, G, p);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::grid_mismatch);
    }
}

TEST_CASE("normalized mode has unit weighted norm")
{
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    const auto t = build_table(1, p);
    const Grid1D g = strip_grid(p, 4095);
    const auto F = mode_function(t[1], g, p);
    CHECK(std::abs(weighted_inner_product(F, F, p).real() - 1.0) < 1e-8);
}

TEST_CASE("inner product is conjugate symmetric and positive")
{
    const auto p = PhysicalParams::strip(0.7, 0.0, 1.3);
    const Grid1D g = strip_grid(p, 300);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> n;
    for (int trial = 0; trial < 20; ++trial) {
        auto F = ComplexBulkBoundaryFunction::zeros(g, 2);
        auto G = ComplexBulkBoundaryFunction::zeros(g, 2);
        for (auto* X : {&F, &G}) {
            for (auto& v : X->bulk)
                v = {n(rng), n(rng)};
            for (auto& v : X->boundary)
                v = {n(rng), n(rng)};
        }
        const auto fg = weighted_inner_product(F, G, p);
        const auto gf = weighted_inner_product(G, F, p);
        CHECK(std::abs(fg - std::conj(gf)) < 1e-12 * std::abs(fg) + 1e-14);
        CHECK(weighted_inner_product(F, F, p).real() > 0.0);
        CHECK(std::abs(weighted_inner_product(F, F, p).imag()) < 1e-12);
    }
}

TEST_CASE("symplectic form")
{
    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    const Grid1D g(-1.0, 1.0, 100);
    const CauchyData A(sample(g, one, {1.0, 1.0}), sample(g, zero, {0.0, 0.0}));
    const CauchyData B(sample(g, zero, {0.0, 0.0}), sample(g, one, {1.0, 1.0}));
    CHECK(symplectic_form(A, A, p) == 0.0);
    CHECK(symplectic_form(A, B, p) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(symplectic_form(A, B, p) == -symplectic_form(B, A, p));

    std::mt19937_64 rng(3);
    std::normal_distribution<double> n;
    auto rnd = [&] {
        auto F = BulkBoundaryFunction::zeros(g, 2);
        for (auto& v : F.bulk)
            v = n(rng);
        for (auto& v : F.boundary)
            v = n(rng);
        return F;
    };
    const CauchyData X(rnd(), rnd());
    const CauchyData Y(rnd(), rnd());
    CHECK(std::abs(symplectic_form(X, Y, p) + symplectic_form(Y, X, p)) < 1e-12);
    CHECK_THROWS_AS(CauchyData(sample(g, one, {1.0, 1.0}), sample(Grid1D(-1.0, 1.0, 50), one, {1.0, 1.0})), Error);
}

TEST_CASE("trace and compatibility")
{
    const Grid1D g(-1.0, 1.0, 10);
    auto F = sample(g, one, {1.0, 1.0});
    CHECK(trace(F) == std::vector<double>{1.0, 1.0});
    CHECK(compatibility_check(F));
    F.boundary[1] += 1.0;
    CHECK_FALSE(compatibility_check(F));

    const auto p = PhysicalParams::strip(1.0, 0.0, 1.0);
    const auto t = build_table(4, p);
    const auto M1 = mode_function(t[1], strip_grid(p, 64), p);
    CHECK(compatibility_check(M1, 1e-10));
    CHECK(compatibility_check(M1, 0.0));

    const auto hs = BulkBoundaryFunction(Grid1D(0.0, 1.0, 4), {2.0, 1.0, 0.0, 0.0, 0.0}, {2.0});
    CHECK(trace(hs).size() == 1);
    CHECK(compatibility_check(hs));
}

TEST_CASE("spectral Sobolev norms")
{
    const auto p = PhysicalParams::strip(1.0, 0.5, 1.0);
    const auto t = build_table(20, p);
    std::vector<double> e3(21, 0.0);
    e3[3] = 1.0;
    CHECK(spectral_sobolev_norm(e3, t, 0.0) == doctest::Approx(1.0));
    CHECK(spectral_sobolev_norm(e3, t, 1.0) == doctest::Approx(t.omega(3)));
    CHECK(spectral_sobolev_norm(e3, t, -1.0) == doctest::Approx(1.0 / t.omega(3)));

    const auto p0 = PhysicalParams::strip(1.0, 0.0, 1.0);
    const auto t0 = build_table(5, p0);
    std::vector<double> e0(6, 0.0);
    e0[0] = 1.0;
    CHECK_THROWS_AS(spectral_sobolev_norm(e0, t0, -0.5), Error);
    CHECK(spectral_sobolev_norm(e0, t0, 1.0) == 0.0);
}

TEST_CASE("r = 0 norm equals weighted L2 norm of the synthesized function")
{
    const auto p = PhysicalParams::strip(1.0, 1.0, 1.0);
    const auto t = build_table(20, p);
    std::vector<double> a(21);
    for (std::size_t m = 0; m < a.size(); ++m)
        a[m] = std::cos(0.7 * m) / (1.0 + m);
    const auto F = synthesize(a, t, strip_grid(p, 4095));
    CHECK(std::abs(spectral_sobolev_norm(a, t, 0.0) - weighted_norm(F, p)) < 1e-6);
}

TEST_CASE("r = 1 norm squared equals the Dirichlet form")
{
    const auto p = PhysicalParams::strip(0.8, 1.0, 1.0);
    const auto t = build_table(12, p);
    std::vector<double> a(13);
    for (std::size_t m = 0; m < a.size(); ++m)
        a[m] = std::pow(0.6, static_cast<double>(m)) * (m % 3 == 0 ? -1.0 : 1.0);
    const Grid1D g = strip_grid(p, 4095);
    const auto w = quadrature_weights(g);
    double bulk = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        double phi = 0.0;
        double dphi = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m) {
            phi += a[m] * eval_mode(t[m], g.node(i), p);
            dphi += a[m] * eval_mode_derivative(t[m], g.node(i), p);
        }
        bulk += w[i] * (dphi * dphi + p.mu * p.mu * phi * phi);
    }
    double bdy = 0.0;
    for (Side s : {Side::minus, Side::plus}) {
        double phi = 0.0;
        for (std::size_t m = 0; m < a.size(); ++m)
            phi += a[m] * t[m].boundary_value(s);
        bdy += p.c * p.mu * p.mu * phi * phi;
    }
    const double n1 = spectral_sobolev_norm(a, t, 1.0);
    CHECK(std::abs(n1 * n1 - (bulk + bdy)) < 1e-6);
}
