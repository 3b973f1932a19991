#include "wentzell/error.hpp"
#include "wentzell/holo.hpp"
#include "wentzell/modes.hpp"

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

TestFunction gaussian_source(double shift = 0.0)
{
    TestFunction f;
    f.t_min = -1.0;
    f.t_max = 1.0;
    f.bulk = [shift](double t, double z) { return bump(t, 1.0) * std::exp(-8.0 * (z - shift) * (z - shift)); };
    return f;
}

HoloOptions options(std::size_t M)
{
    HoloOptions o;
    o.M = M;
    o.smearing = {-1.0, 1.0, 801, 512};
    return o;
}

} // namespace

TEST_CASE("bump profile")
{
    CHECK(bump_chi(0.0) == 1.0);
    CHECK(bump_chi(0.5) == 0.0);
    CHECK(bump_chi(-0.6) == 0.0);
    CHECK(bump_chi(0.49) > 0.0);
    CHECK(bump_chi(0.2) == doctest::Approx(bump_chi(-0.2)));
}

TEST_CASE("choose_a")
{
    const auto t = build_table(40, PhysicalParams::strip(1.0, 1.0, 1.0));
    const double w0 = t.omega(0);
    const double w1 = t.omega(1);
    const double w2 = t.omega(2);
    const double expect = std::max({1.0 / (w0 * w0), 1.0 / (w1 * w1 - w0 * w0), 1.0 / (w2 * w2 - w1 * w1)}) / 0.9;
    CHECK(choose_a(t, 2) == doctest::Approx(expect));
    CHECK(choose_a(t, 2) == doctest::Approx(1.5011).epsilon(1e-4));
    for (std::size_t M = 2; M <= 20; M *= 2)
        CHECK(choose_a(t, 2 * M) <= choose_a(t, M) + 1e-15);

    const auto t0 = build_table(10, PhysicalParams::strip(1.0, 0.0, 1.0));
    CHECK_THROWS_AS(choose_a(t0, 5, 0), Error);
    CHECK(choose_a(t0, 5, 1) > 0.0);
}

TEST_CASE("Schwartz extension")
{
    const auto t = build_table(10, PhysicalParams::strip(1.0, 1.0, 1.0));
    std::vector<std::complex<double>> plus(6);
    std::vector<std::complex<double>> minus(6);
    for (std::size_t m = 0; m <= 5; ++m) {
        plus[m] = {1.0 + m, 0.5 * m};
        minus[m] = std::conj(plus[m]);
    }
    const double a = choose_a(t, 5);
    const auto ext = extend_to_schwartz(plus, minus, t, a);
    CHECK(ext(t.omega(3)) == plus[3]);
    CHECK(ext(-t.omega(3)) == minus[3]);
    CHECK(ext(0.0) == std::complex<double>(0.0, 0.0));
    const double between = ext.support(1).second + 0.5 * (ext.support(2).first - ext.support(1).second);
    CHECK(ext(between) == std::complex<double>(0.0, 0.0));
    for (std::size_t m = 0; m < 5; ++m)
        CHECK(ext.support(m).second <= ext.support(m + 1).first);
    CHECK(ext.support(0).first > 0.0);

    const double h = 1e-5;
    const double w = 0.5 * (t.omega(2) + ext.support(2).second);
    const auto d1 = (ext(w + h) - ext(w - h)) / (2 * h);
    const auto d1h = (ext(w + 2 * h) - ext(w - 2 * h)) / (4 * h);
    CHECK(std::abs(d1 - d1h) < 1e-4 * (std::abs(d1) + 1.0));

    try {
        extend_to_schwartz(plus, minus, t, 0.8);
        FAIL("overlap not detected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::domain);
        CHECK(std::string(e.what()).find("modes 0 and 1") != std::string::npos);
    }
    CHECK_THROWS_AS(extend_to_schwartz(plus, minus, t, 0.1 * a), Error);
}

TEST_CASE("holographic dual reproduces the coefficients")
{
    const auto t = build_table(40, PhysicalParams::strip(1.0, 1.0, 1.0));
    const auto img = holographic_dual(gaussian_source(), t, options(8));
    CHECK(img.meta.M == 8);
    CHECK(verify_dual(img, img.coeffs, t) < 1e-6);
    CHECK(img.t.size() == img.f_prime.size());
    CHECK(img.envelope.size() == img.t.size());

    double max_re = 0.0;
    double max_im = 0.0;
    for (const auto& v : img.f_prime) {
        max_re = std::max(max_re, std::abs(v.real()));
        max_im = std::max(max_im, std::abs(v.imag()));
    }
    CHECK(max_im < 1e-10 * max_re);

    std::vector<ModeEntry> perturbed = t.entries();
    for (auto& e : perturbed)
        e.d_bdy *= 1.01;
    const ModeTable tp(t.params(), perturbed, t.residual_tol());
    const double dev = verify_dual(img, img.coeffs, tp);
    CHECK(dev == doctest::Approx(0.01).epsilon(0.05));
}

TEST_CASE("holographic dual is linear")
{
    const auto t = build_table(40, PhysicalParams::strip(1.0, 1.0, 1.0));
    auto o = options(6);
    o.a = choose_a(t, 6);
    const auto f = gaussian_source(0.2);
    const auto g = gaussian_source(-0.4);
    TestFunction sum = f;
    sum.bulk = [&](double tt, double z) { return 2.0 * f.bulk(tt, z) - 0.5 * g.bulk(tt, z); };
    const auto If = holographic_dual(f, t, o);
    const auto Ig = holographic_dual(g, t, o);
    const auto Is = holographic_dual(sum, t, o);
    double err = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < Is.f_prime.size(); ++i) {
        err = std::max(err, std::abs(Is.f_prime[i] - (2.0 * If.f_prime[i] - 0.5 * Ig.f_prime[i])));
        scale = std::max(scale, std::abs(Is.f_prime[i]));
    }
    CHECK(err < 1e-12 * scale);

    const auto pr = pairing_check(If, Ig, t);
    CHECK(pr.rel_diff < 1e-12);
}

TEST_CASE("single mode packet gives a single burst")
{
    const auto t = build_table(20, PhysicalParams::strip(1.0, 1.0, 1.0));
    const auto& p = t.params();
    const ModeEntry e = t[3];
    TestFunction f;
    f.t_min = -1.0;
    f.t_max = 1.0;
    f.bulk = [e, p](double tt, double z) { return bump(tt, 1.0) * eval_mode(e, z, p); };
    f.boundary[0] = [e](double tt) { return bump(tt, 1.0) * e.boundary_value(Side::minus); };
    f.boundary[1] = [e](double tt) { return bump(tt, 1.0) * e.boundary_value(Side::plus); };
    const auto img = holographic_dual(f, t, options(10));
    for (std::size_t m = 0; m <= 10; ++m)
        if (m != 3)
            CHECK(std::abs(img.coeffs.plus[m]) < 1e-6 * std::abs(img.coeffs.plus[3]));
    const auto bursts = detect_bursts(img.t, img.envelope, 0.1);
    REQUIRE(bursts.size() == 1);
    CHECK(std::abs(bursts[0].t) < 0.05);
}

TEST_CASE("burst detection")
{
    std::vector<double> t;
    std::vector<double> env;
    for (int i = 0; i <= 400; ++i) {
        const double x = -4.0 + 0.02 * i;
        t.push_back(x);
        env.push_back(std::exp(-20 * (x - 1) * (x - 1)) + 0.5 * std::exp(-20 * (x + 2) * (x + 2)) +
                      0.01 * std::exp(-20 * x * x));
    }
    const auto b = detect_bursts(t, env, 0.1);
    REQUIRE(b.size() == 2);
    CHECK(b[0].t == doctest::Approx(-2.0));
    CHECK(b[1].t == doctest::Approx(1.0));
}

TEST_CASE("figure test function")
{
    CHECK(fig2_tau(0.0) == doctest::Approx(std::exp(-4.0)));
    CHECK(fig2_tau(0.5) == 0.0);
    Fig2Config cfg;
    cfg.M = 20;
    cfg.n_t = 1600;
    const auto r = fig2_reproduce(cfg);
    CHECK(r.f00 == doctest::Approx(std::exp(-8.0)).epsilon(1e-12));
    CHECK(r.decay_ok);
    CHECK(r.bursts.size() >= 6);
}

TEST_CASE("half-space dual")
{
    const auto p = PhysicalParams::half_space(1.0, 0.5);
    auto f = [](double tt, double z) { return bump(tt, 1.0) * std::exp(-4.0 * (z - 1.0) * (z - 1.0)); };
    std::vector<double> q;
    for (int i = 0; i <= 200; ++i)
        q.push_back(1e-3 * i * i / 20.0);
    const auto d = halfspace_dual(f, -1.0, 1.0, 5.0, p, q);
    CHECK(d.omega.front() == doctest::Approx(0.5));
    CHECK(d.edge_limit_abs ==
          doctest::Approx(std::sqrt(std::numbers::pi / 2.0) * std::abs(d.fhat_plus.front())).epsilon(1e-12));
    CHECK(std::abs(d.fhat_prime[1]) == doctest::Approx(d.edge_limit_abs).epsilon(1e-3));
    for (std::size_t i = 0; i < q.size(); ++i)
        CHECK(std::abs(d.fhat_prime[i]) ==
              doctest::Approx(std::sqrt(std::numbers::pi * (q[i] * q[i] + 1.0) / 2.0) * std::abs(d.fhat_plus[i])));
}
